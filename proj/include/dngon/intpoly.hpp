#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dngon {

/// Dense univariate polynomial over Z; index = degree, trailing coefficient nonzero.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(mpz_class a) { return IntPoly({std::move(a)}); }
  static IntPoly x() { return IntPoly({0, 1}); }
  static IntPoly monomial(int k, mpz_class a = 1) {
    std::vector<mpz_class> c(k + 1);
    c[k] = std::move(a);
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const mpz_class& coeff(int k) const {
    static const mpz_class z0 = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return z0;
    return c_[k];
  }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a) { return IntPoly::zero() - a; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  // Long division by a monic divisor; exact over Z.
  static void divmod(const IntPoly& a, const IntPoly& m, IntPoly& q, IntPoly& r) {
    if (!m.is_monic()) throw std::invalid_argument("IntPoly::divmod: divisor must be monic");
    std::vector<mpz_class> rem = a.c_;
    std::vector<mpz_class> quo;
    int dm = m.degree();
    while (static_cast<int>(rem.size()) - 1 >= dm) {
      int k = static_cast<int>(rem.size()) - 1 - dm;
      mpz_class lead = rem.back();
      if (static_cast<int>(quo.size()) < k + 1) quo.resize(k + 1);
      quo[k] = lead;
      for (int i = 0; i <= dm; ++i) rem[k + i] -= lead * m.c_[i];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    q = IntPoly(std::move(quo));
    r = IntPoly(std::move(rem));
  }

  IntPoly exact_div(const IntPoly& m) const {
    IntPoly q, r;
    divmod(*this, m, q, r);
    if (!r.is_zero()) throw std::logic_error("IntPoly::exact_div: nonzero remainder");
    return q;
  }

  mpq_class eval(const mpq_class& t) const {
    mpq_class v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const mpz_class& a = c_[k];
      if (a == 0) continue;
      mpz_class abs_a = abs(a);
      if (s.empty())
        s += (a < 0 ? "-" : "");
      else
        s += (a < 0 ? " - " : " + ");
      if (abs_a != 1 || k == 0) s += abs_a.get_str();
      if (k >= 1) {
        s += var;
        if (k >= 2) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

private:
  std::vector<mpz_class> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

inline mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

/// m-th cyclotomic polynomial, by exact division of x^m - 1 by the lower-order ones.
inline IntPoly cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: m must be positive");
  std::map<int, IntPoly> phi;
  for (int e = 1; e <= m; ++e) {
    if (m % e != 0) continue;
    IntPoly num = IntPoly::monomial(e) - IntPoly::constant(1);
    for (auto& [d, pd] : phi)
      if (e % d == 0) num = num.exact_div(pd);
    phi[e] = num;
  }
  return phi[m];
}

/// Minimal polynomial P of lambda = 2cos(pi/n) for odd n >= 3, via the identity
/// t^d P(t + 1/t) = Phi_2n(t) with d = phi(2n)/2: the coefficients solve a
/// triangular system against the top half of Phi_2n, and the full identity is
/// then verified term by term.
inline IntPoly min_poly(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("min_poly: n must be odd and >= 3");
  const int d = euler_phi(2 * n) / 2;
  IntPoly target = cyclotomic(2 * n);
  if (target.degree() != 2 * d) throw std::logic_error("min_poly: degree mismatch");

  // coefficient of t^(d+m) in t^(d-k) (t^2+1)^k is C(k, (k+m)/2) when k = m mod 2
  std::vector<mpz_class> c(d + 1);
  for (int m = d; m >= 0; --m) {
    mpz_class acc = target.coeff(d + m);
    for (int k = m + 2; k <= d; k += 2) acc -= c[k] * binomial(k, (k + m) / 2);
    c[m] = acc;  // C(m, m) = 1
  }
  IntPoly p{std::vector<mpz_class>(c)};

  IntPoly expanded = IntPoly::zero();
  IntPoly t2p1 = IntPoly({1, 0, 1});
  IntPoly pw = IntPoly::constant(1);  // (t^2+1)^k
  std::vector<IntPoly> pows(d + 1);
  for (int k = 0; k <= d; ++k) {
    pows[k] = pw;
    pw = pw * t2p1;
  }
  for (int k = 0; k <= d; ++k)
    expanded = expanded + IntPoly::monomial(d - k, c[k]) * pows[k];
  if (expanded != target) throw std::logic_error("min_poly: identity check failed");
  return p;
}

/// Coefficient pattern for prime n: monic of degree (n-1)/2,
/// coefficient -1 at degree (n-3)/2 and -(n-3)/2 at degree (n-5)/2.
inline bool prime_coefficient_check(int n) {
  IntPoly p = min_poly(n);
  const int d = (n - 1) / 2;
  if (p.degree() != d || !p.is_monic()) return false;
  if ((n - 3) / 2 >= 0 && p.coeff((n - 3) / 2) != -1) return false;
  if ((n - 5) / 2 >= 0) {
    mpz_class want = -mpz_class((n - 3) / 2);
    if (p.coeff((n - 5) / 2) != want) return false;
  }
  return true;
}

}  // namespace dngon
