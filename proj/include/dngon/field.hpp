#pragma once

#include "dngon/intpoly.hpp"

#include <cassert>
#include <numeric>
#include <sstream>

namespace dngon {

/// Everything attached to one lambda = 2cos(pi/n): the extension degree, the
/// minimal polynomial, and the reduction table for lambda^d .. lambda^(2d-2).
/// Immutable after construction; elements hold a pointer to it.
struct FieldContext {
  int n;
  int d;
  IntPoly minimal;
  std::vector<mpq_class> lam_d;  // lambda^d over the basis 1, lambda, ..., lambda^{d-1}

  explicit FieldContext(int n_) : n(n_), d(euler_phi(2 * n_) / 2), minimal(min_poly(n_)), lam_d(d) {
    // lambda^d = -(c_0 + c_1 lambda + ... + c_{d-1} lambda^{d-1}), minimal is monic
    for (int i = 0; i < d; ++i) lam_d[i] = -mpq_class(minimal.coeff(i));
  }
  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;
};

/// Element of Q(lambda), stored as d rational coefficients over 1, lambda, ..., lambda^{d-1}.
class FieldElement {
public:
  FieldElement() : F_(nullptr) {}
  FieldElement(const FieldContext& F, mpq_class a) : F_(&F), c_(F.d) {
    a.canonicalize();
    c_[0] = std::move(a);
  }
  FieldElement(const FieldContext& F, std::vector<mpq_class> c) : F_(&F), c_(std::move(c)) {
    if (static_cast<int>(c_.size()) > F.d) reduce_in_place();
    c_.resize(F.d);
    for (auto& q : c_) q.canonicalize();
  }

  static FieldElement lambda(const FieldContext& F) {
    std::vector<mpq_class> c(F.d);
    if (F.d > 1)
      c[1] = 1;
    else
      c[0] = -mpq_class(F.minimal.coeff(0));  // d = 1: lambda is rational
    return FieldElement(F, std::move(c));
  }
  static FieldElement from_intpoly(const FieldContext& F, const IntPoly& p) {
    std::vector<mpq_class> c(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c[i] = mpq_class(p.coeff(i));
    return FieldElement(F, std::move(c));
  }

  const FieldContext& ctx() const {
    assert(F_);
    return *F_;
  }
  bool valid() const { return F_ != nullptr; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& coeff(int k) const {
    static const mpq_class z0 = 0;
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : z0;
  }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  /// true iff the element lies in Z[lambda] (all denominators 1)
  bool is_integral() const {
    for (const auto& q : c_)
      if (q.get_den() != 1) return false;
    return true;
  }
  mpq_class rational_value() const {
    if (!is_rational()) throw std::logic_error("FieldElement: not rational");
    return c_.empty() ? mpq_class(0) : c_[0];
  }
  /// lcm of coefficient denominators
  mpz_class denominator() const {
    mpz_class l = 1;
    for (const auto& q : c_) {
      mpz_class g;
      mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
      l = g;
    }
    return l;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    std::vector<mpq_class> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return FieldElement(a.ctx(), std::move(c));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    std::vector<mpq_class> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return FieldElement(a.ctx(), std::move(c));
  }
  friend FieldElement operator-(const FieldElement& a) {
    std::vector<mpq_class> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return FieldElement(a.ctx(), std::move(c));
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    const int d = a.ctx().d;
    std::vector<mpq_class> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b.c_[j] == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    FieldElement r;
    r.F_ = a.F_;
    r.c_ = std::move(prod);
    r.reduce_in_place();
    r.c_.resize(d);
    return r;
  }
  friend FieldElement operator*(const FieldElement& a, const mpq_class& s) {
    std::vector<mpq_class> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] * s;
    return FieldElement(a.ctx(), std::move(c));
  }
  friend FieldElement operator*(const mpq_class& s, const FieldElement& a) { return a * s; }

  FieldElement inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement: division by zero");
    // extended gcd of the coefficient polynomial with the minimal polynomial over Q
    std::vector<mpq_class> r0(ctx().minimal.degree() + 1), r1 = c_;
    for (int i = 0; i <= ctx().minimal.degree(); ++i) r0[i] = mpq_class(ctx().minimal.coeff(i));
    trimq(r1);
    std::vector<mpq_class> s0, s1{mpq_class(1)};  // s coefficients for r1 only
    while (true) {
      // divide r0 by r1
      std::vector<mpq_class> q, rem = r0;
      int d1 = static_cast<int>(r1.size()) - 1;
      while (static_cast<int>(rem.size()) - 1 >= d1 && !rem.empty()) {
        int k = static_cast<int>(rem.size()) - 1 - d1;
        mpq_class f = rem.back() / r1.back();
        if (static_cast<int>(q.size()) < k + 1) q.resize(k + 1);
        q[k] = f;
        for (int i = 0; i <= d1; ++i) rem[k + i] -= f * r1[i];
        trimq(rem);
      }
      // s_new = s0 - q * s1
      std::vector<mpq_class> snew = s0;
      if (!q.empty() && !s1.empty()) {
        snew.resize(std::max(snew.size(), q.size() + s1.size() - 1));
        for (size_t i = 0; i < q.size(); ++i)
          for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
      }
      trimq(snew);
      if (rem.empty()) {
        // r1 is the gcd; minimal poly irreducible => gcd is a nonzero constant
        if (r1.size() != 1) throw std::logic_error("FieldElement: non-trivial gcd with minimal polynomial");
        std::vector<mpq_class> inv = s1;
        for (auto& v : inv) v /= r1[0];
        return FieldElement(ctx(), std::move(inv));
      }
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(snew);
    }
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
      if (c_[k] == 0) continue;
      mpq_class a = c_[k];
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      mpq_class ab = abs(a);
      if (ab != 1 || k == 0) os << ab.get_str();
      if (k >= 1) {
        os << "l";
        if (k >= 2) os << "^" << k;
      }
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

  // total order on coefficient vectors (for deterministic containers, not the real order)
  friend bool coeff_less(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      int c = cmp(a.c_[i], b.c_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

private:
  const FieldContext* F_;
  std::vector<mpq_class> c_;

  void check(const FieldElement& o) const {
    assert(F_ && F_ == o.F_ && "FieldElement: mixed or missing contexts");
  }
  static void trimq(std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  void reduce_in_place() {
    // lambda^k = lambda^(k-d) * lambda^d; fold top coefficients downward
    const int d = F_->d;
    for (int k = static_cast<int>(c_.size()) - 1; k >= d; --k) {
      mpq_class top = c_[k];
      if (top == 0) continue;
      c_[k] = 0;
      for (int i = 0; i < d; ++i) c_[k - d + i] += top * F_->lam_d[i];
    }
    if (static_cast<int>(c_.size()) < d) c_.resize(d);
  }
};

inline FieldElement operator*(const FieldElement& a, long s) { return a * mpq_class(s); }
inline FieldElement operator*(long s, const FieldElement& a) { return a * mpq_class(s); }

/// 2cos(k pi/n) as an element of Q(lambda): C_0 = 2, C_1 = lambda, C_{k+1} = lambda C_k - C_{k-1}.
inline FieldElement cheb_c(const FieldContext& F, long k) {
  if (k < 0) k = -k;
  FieldElement c0(F, 2), c1 = FieldElement::lambda(F);
  if (k == 0) return c0;
  FieldElement lam = c1;
  for (long i = 1; i < k; ++i) {
    FieldElement c2 = lam * c1 - c0;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

/// sin(k pi/n)/sin(pi/n) as an element of Q(lambda): S_0 = 0, S_1 = 1, S_{k+1} = lambda S_k - S_{k-1}.
inline FieldElement cheb_s(const FieldContext& F, long k) {
  bool neg = k < 0;
  if (neg) k = -k;
  FieldElement s0(F, 0), s1(F, 1);
  FieldElement r = (k == 0) ? s0 : s1;
  FieldElement lam = FieldElement::lambda(F);
  for (long i = 1; i < k; ++i) {
    FieldElement s2 = lam * s1 - s0;
    s0 = s1;
    s1 = s2;
    r = s1;
  }
  return neg ? -r : r;
}

}  // namespace dngon
