#pragma once

#include "dngon/field.hpp"
#include "dngon/gf2poly.hpp"

#include <optional>

namespace dngon {

/// The finite ring O/2O = GF(2)[X]/(pbar), pbar = reduction of the minimal
/// polynomial, together with its factorization and CRT data for class tests.
struct Mod2Context {
  const FieldContext* field;
  int d;
  Gf2Poly pbar;
  std::vector<Gf2Factor> factors;          // product of f^e equals pbar
  std::vector<Gf2Poly> moduli;             // f^e per factor
  std::vector<Gf2Poly> crt_basis;          // b_i = 1 mod m_i, 0 mod m_j (j != i)

  explicit Mod2Context(const FieldContext& F) : field(&F), d(F.d) {
    for (int k = 0; k <= F.minimal.degree(); ++k)
      if (mpz_odd_p(F.minimal.coeff(k).get_mpz_t())) pbar.set(k, true);
    factors = gf2_factor(pbar);
    for (const auto& [f, e] : factors) {
      Gf2Poly m = Gf2Poly::one();
      for (int i = 0; i < e; ++i) m = m * f;
      moduli.push_back(m);
    }
    for (size_t i = 0; i < moduli.size(); ++i) {
      Gf2Poly rest = pbar / moduli[i];
      Gf2Poly inv = gf2_inverse_mod(rest % moduli[i], moduli[i]);
      crt_basis.push_back((rest * inv) % pbar);
    }
  }
  Mod2Context(const Mod2Context&) = delete;
  Mod2Context& operator=(const Mod2Context&) = delete;

  Gf2Poly reduce(const Gf2Poly& x) const { return x % pbar; }
  Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b) const { return (a * b) % pbar; }
  Gf2Poly add(const Gf2Poly& a, const Gf2Poly& b) const { return a ^ b; }

  bool is_unit(const Gf2Poly& x) const { return gf2_gcd(x % pbar, pbar).is_one(); }
  Gf2Poly inverse(const Gf2Poly& x) const { return gf2_inverse_mod(x % pbar, pbar); }

  /// number of unimodular-pair classes: product of q^(e-1)(q+1), q = 2^deg f
  mpz_class p1_size() const {
    mpz_class total = 1;
    for (const auto& [f, e] : factors) {
      mpz_class q = 1;
      q <<= f.degree();  // 2^deg
      mpz_class local = q + 1;
      for (int i = 1; i < e; ++i) local *= q;
      total *= local;
    }
    return total;
  }

  Gf2Poly crt_combine(const std::vector<Gf2Poly>& residues) const {
    Gf2Poly r;
    for (size_t i = 0; i < residues.size(); ++i) r = r ^ ((residues[i] * crt_basis[i]) % pbar);
    return r % pbar;
  }
};

/// Coefficientwise reduction mod 2 of an integral field element.
inline Gf2Poly reduce_mod2(const Mod2Context& M, const FieldElement& x) {
  if (!x.is_integral()) throw std::invalid_argument("reduce_mod2: element is not in Z[lambda]");
  Gf2Poly r;
  for (int k = 0; k < static_cast<int>(x.coeffs().size()); ++k)
    if (mpz_odd_p(x.coeffs()[k].get_num().get_mpz_t())) r.set(k, true);
  return M.reduce(r);
}

/// Element of P^1(O/2O): a unimodular pair up to units, stored canonically.
/// Canonical form: if y is a unit, (x/y, 1); else if x is a unit, (1, y/x);
/// else the CRT combination of per-factor forms where the coordinate of
/// smaller f-adic valuation has unit part 1.
class ProjClass {
public:
  ProjClass(const Mod2Context& M, Gf2Poly x, Gf2Poly y) : M_(&M) {
    x = M.reduce(x);
    y = M.reduce(y);
    if (x.is_zero() && y.is_zero()) throw std::invalid_argument("ProjClass: zero pair");
    unimodular_ = gf2_gcd(gf2_gcd(x, y), M.pbar).is_one();
    if (M.is_unit(y)) {
      Gf2Poly u = M.inverse(y);
      x_ = M.mul(x, u);
      y_ = Gf2Poly::one();
    } else if (M.is_unit(x)) {
      Gf2Poly u = M.inverse(x);
      x_ = Gf2Poly::one();
      y_ = M.mul(y, u);
    } else {
      canonicalize_local(x, y);
    }
  }

  const Gf2Poly& x() const { return x_; }
  const Gf2Poly& y() const { return y_; }
  bool unimodular() const { return unimodular_; }
  const Mod2Context& ctx() const { return *M_; }

  friend bool operator==(const ProjClass& a, const ProjClass& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const ProjClass& a, const ProjClass& b) { return !(a == b); }
  friend bool operator<(const ProjClass& a, const ProjClass& b) {
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
  }

  std::string to_string() const { return "[" + x_.to_string() + " : " + y_.to_string() + "]"; }

private:
  const Mod2Context* M_;
  Gf2Poly x_, y_;
  bool unimodular_ = false;

  void canonicalize_local(const Gf2Poly& x, const Gf2Poly& y) {
    std::vector<Gf2Poly> rx, ry;
    for (size_t i = 0; i < M_->moduli.size(); ++i) {
      const Gf2Poly& f = M_->factors[i].f;
      const int e = M_->factors[i].multiplicity;
      const Gf2Poly& m = M_->moduli[i];
      Gf2Poly lx = x % m, ly = y % m;
      auto valuation = [&](Gf2Poly v) {
        int a = 0;
        while (!v.is_zero() && a < e && (v % f).is_zero()) {
          v = v / f;
          ++a;
        }
        return v.is_zero() ? e : a;
      };
      int ax = valuation(lx), ay = valuation(ly);
      if (ax == e && ay == e) {  // both zero locally (non-unimodular pair)
        rx.push_back(Gf2Poly());
        ry.push_back(Gf2Poly());
        continue;
      }
      // scale by the inverse of the unit part of the lower-valuation coordinate;
      // the other coordinate is then uniquely determined mod f^e
      const Gf2Poly& lead = (ax <= ay) ? lx : ly;
      Gf2Poly unit = lead;
      for (int a = std::min(ax, ay); a > 0; --a) unit = unit / f;
      Gf2Poly w = gf2_inverse_mod(unit % m, m);
      rx.push_back((lx * w) % m);
      ry.push_back((ly * w) % m);
    }
    x_ = M_->crt_combine(rx);
    y_ = M_->crt_combine(ry);
  }
};

inline bool class_eq(const ProjClass& a, const ProjClass& b) { return a == b; }

/// Psi: integral pair -> class in P^1(O/2O). Divides out common powers of two
/// exactly, then projects; nullopt when the residual pair is not unimodular
/// (the coprime-representative hypothesis of the obstruction cannot be certified).
inline std::optional<ProjClass> psi(const Mod2Context& M, FieldElement x, FieldElement y) {
  if (x.is_zero() && y.is_zero()) throw std::invalid_argument("psi: zero pair");
  if (!x.is_integral() || !y.is_integral()) throw std::invalid_argument("psi: pair is not integral");
  while (true) {
    Gf2Poly xb = reduce_mod2(M, x), yb = reduce_mod2(M, y);
    if (!xb.is_zero() || !yb.is_zero()) {
      ProjClass c(M, xb, yb);
      if (!c.unimodular()) return std::nullopt;
      return c;
    }
    x = x * mpq_class(1, 2);
    y = y * mpq_class(1, 2);
  }
}

}  // namespace dngon
