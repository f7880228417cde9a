#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dngon {

/// Polynomial over GF(2), bit k of the word array = coefficient of X^k.
class Gf2Poly {
public:
  Gf2Poly() = default;
  static Gf2Poly zero() { return {}; }
  static Gf2Poly one() { return from_bits({1}); }
  static Gf2Poly x() { return from_bits({0, 1}); }
  static Gf2Poly monomial(int k) {
    Gf2Poly p;
    p.set(k, true);
    return p;
  }
  static Gf2Poly from_bits(const std::vector<int>& bits) {
    Gf2Poly p;
    for (size_t i = 0; i < bits.size(); ++i)
      if (bits[i] & 1) p.set(static_cast<int>(i), true);
    return p;
  }

  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
  int degree() const {  // -1 for zero
    if (w_.empty()) return -1;
    uint64_t top = w_.back();
    return static_cast<int>(w_.size() - 1) * 64 + (63 - __builtin_clzll(top));
  }
  bool get(int k) const {
    size_t word = k / 64;
    return word < w_.size() && ((w_[word] >> (k % 64)) & 1);
  }
  void set(int k, bool v) {
    size_t word = k / 64;
    if (word >= w_.size()) {
      if (!v) return;
      w_.resize(word + 1, 0);
    }
    if (v)
      w_[word] |= uint64_t(1) << (k % 64);
    else
      w_[word] &= ~(uint64_t(1) << (k % 64));
    trim();
  }
  std::vector<int> bits() const {
    std::vector<int> b(degree() + 1);
    for (int i = 0; i <= degree(); ++i) b[i] = get(i) ? 1 : 0;
    return b;
  }

  friend Gf2Poly operator^(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r;
    r.w_.resize(std::max(a.w_.size(), b.w_.size()), 0);
    for (size_t i = 0; i < r.w_.size(); ++i) {
      uint64_t v = 0;
      if (i < a.w_.size()) v ^= a.w_[i];
      if (i < b.w_.size()) v ^= b.w_[i];
      r.w_[i] = v;
    }
    r.trim();
    return r;
  }
  friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) { return a ^ b; }

  Gf2Poly shifted(int k) const {  // * X^k
    if (is_zero() || k == 0) return *this;
    Gf2Poly r;
    r.w_.resize(w_.size() + k / 64 + 1, 0);
    int wordshift = k / 64, bitshift = k % 64;
    for (size_t i = 0; i < w_.size(); ++i) {
      r.w_[i + wordshift] |= w_[i] << bitshift;
      if (bitshift) r.w_[i + wordshift + 1] |= w_[i] >> (64 - bitshift);
    }
    r.trim();
    return r;
  }

  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (int k = 0; k <= b.degree(); ++k)
      if (b.get(k)) r = r ^ a.shifted(k);
    return r;
  }

  static void divmod(const Gf2Poly& a, const Gf2Poly& m, Gf2Poly& q, Gf2Poly& r) {
    if (m.is_zero()) throw std::invalid_argument("Gf2Poly::divmod by zero");
    q = Gf2Poly();
    r = a;
    int dm = m.degree();
    while (r.degree() >= dm) {
      int k = r.degree() - dm;
      q.set(k, !q.get(k));
      r = r ^ m.shifted(k);
    }
  }
  friend Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& m) {
    Gf2Poly q, r;
    divmod(a, m, q, r);
    return r;
  }
  friend Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& m) {
    Gf2Poly q, r;
    divmod(a, m, q, r);
    return q;
  }

  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Gf2Poly& a, const Gf2Poly& b) { return !(a == b); }
  friend bool operator<(const Gf2Poly& a, const Gf2Poly& b) {  // grading then lex, deterministic
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int k = da; k >= 0; --k) {
      bool ba = a.get(k), bb = b.get(k);
      if (ba != bb) return bb;
    }
    return false;
  }

  Gf2Poly derivative() const {
    Gf2Poly r;
    for (int k = 1; k <= degree(); k += 2) r.set(k - 1, get(k));
    return r;
  }
  bool is_even_exponents() const {
    for (int k = 1; k <= degree(); k += 2)
      if (get(k)) return false;
    return true;
  }
  Gf2Poly sqrt_even() const {  // inverse of squaring: only even exponents present
    Gf2Poly r;
    for (int k = 0; k <= degree(); k += 2) r.set(k / 2, get(k));
    return r;
  }
  Gf2Poly square() const {
    Gf2Poly r;
    for (int k = 0; k <= degree(); ++k) r.set(2 * k, get(k));
    return r;
  }

  std::string to_string(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      if (!get(k)) continue;
      if (!s.empty()) s += " + ";
      if (k == 0)
        s += "1";
      else if (k == 1)
        s += var;
      else
        s += var + "^" + std::to_string(k);
    }
    return s;
  }

private:
  std::vector<uint64_t> w_;
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }
};

inline Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// u with u*a = 1 mod m; requires gcd(a, m) = 1.
inline Gf2Poly gf2_inverse_mod(const Gf2Poly& a, const Gf2Poly& m) {
  Gf2Poly r0 = m, r1 = a % m;
  Gf2Poly s0, s1 = Gf2Poly::one();
  while (!r1.is_zero()) {
    Gf2Poly q, r2;
    Gf2Poly::divmod(r0, r1, q, r2);
    Gf2Poly s2 = s0 ^ (q * s1);
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (!r0.is_one()) throw std::domain_error("gf2_inverse_mod: element is not a unit");
  return s0 % m;
}

inline Gf2Poly gf2_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) {
  return (a * b) % m;
}

struct Gf2Factor {
  Gf2Poly f;
  int multiplicity;
};

namespace detail {

inline uint64_t xorshift64(uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

inline Gf2Poly random_poly(int max_deg, uint64_t& seed) {
  Gf2Poly r;
  for (int k = 0; k <= max_deg; ++k)
    if (xorshift64(seed) & 1) r.set(k, true);
  return r;
}

// equal-degree splitting of a squarefree product of degree-k irreducibles
inline void gf2_edf(const Gf2Poly& g, int k, std::vector<Gf2Poly>& out, uint64_t& seed) {
  if (g.degree() == k) {
    out.push_back(g);
    return;
  }
  while (true) {
    Gf2Poly r = random_poly(g.degree() - 1, seed) % g;
    if (r.is_zero()) continue;
    // trace map r + r^2 + r^4 + ... + r^(2^(k-1)) mod g
    Gf2Poly t = r, p = r;
    for (int i = 1; i < k; ++i) {
      p = p.square() % g;
      t = t ^ p;
    }
    Gf2Poly d = gf2_gcd(t, g);
    if (!d.is_one() && d != g) {
      gf2_edf(d, k, out, seed);
      gf2_edf(g / d, k, out, seed);
      return;
    }
  }
}

// distinct-degree factorization of a squarefree polynomial
inline void gf2_ddf(Gf2Poly w, std::vector<Gf2Poly>& out, uint64_t& seed) {
  Gf2Poly h = Gf2Poly::x() % w;
  int k = 0;
  while (w.degree() > 0) {
    ++k;
    if (2 * k > w.degree()) {  // what is left is irreducible
      out.push_back(w);
      return;
    }
    h = h.square() % w;
    Gf2Poly g = gf2_gcd(h ^ (Gf2Poly::x() % w), w);
    if (!g.is_one()) {
      gf2_edf(g, k, out, seed);
      w = w / g;
      h = h % w;
    }
  }
}

}  // namespace detail

/// Complete factorization over GF(2) into irreducible factors with multiplicities.
inline std::vector<Gf2Factor> gf2_factor(const Gf2Poly& f_in, uint64_t seed = 0x9e3779b97f4a7c15ull) {
  if (f_in.is_zero()) throw std::invalid_argument("gf2_factor: zero polynomial");
  std::map<Gf2Poly, int> acc;
  // recursion: peel squarefree parts, take square roots of derivative-free parts
  struct Rec {
    std::map<Gf2Poly, int>& acc;
    uint64_t seed;
    void run(Gf2Poly f, int scale) {
      if (f.degree() <= 0) return;
      if (f.derivative().is_zero()) {
        run(f.sqrt_even(), 2 * scale);
        return;
      }
      Gf2Poly g = gf2_gcd(f, f.derivative());
      Gf2Poly w = f / g;  // squarefree, nontrivial
      std::vector<Gf2Poly> irr;
      detail::gf2_ddf(w, irr, seed);
      for (const auto& q : irr) {
        int e = 0;
        while ((f % q).is_zero()) {
          f = f / q;
          ++e;
        }
        acc[q] += e * scale;
      }
      run(f, scale);
    }
  } rec{acc, seed};
  rec.run(f_in, 1);
  std::vector<Gf2Factor> out;
  out.reserve(acc.size());
  for (auto& [q, e] : acc) out.push_back({q, e});
  return out;
}

inline bool gf2_is_irreducible(const Gf2Poly& f) {
  auto fac = gf2_factor(f);
  return fac.size() == 1 && fac[0].multiplicity == 1;
}

}  // namespace dngon
