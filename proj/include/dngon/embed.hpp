#pragma once

#include "dngon/field.hpp"

#include <mpfr.h>

#include <optional>

namespace dngon {

/// Thin RAII wrapper over mpfr_t.
class Mpfr {
public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

private:
  mpfr_t v_;
};

/// Closed interval [lo, hi] with directed-rounding endpoints.
struct RInterval {
  Mpfr lo, hi;
  explicit RInterval(mpfr_prec_t prec) : lo(prec), hi(prec) {}

  void set_q(const mpq_class& q) {
    mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  }
  void set_zero() {
    mpfr_set_zero(lo.get(), 0);
    mpfr_set_zero(hi.get(), 0);
  }
  bool positive() const { return mpfr_sgn(lo.get()) > 0; }
  bool negative() const { return mpfr_sgn(hi.get()) < 0; }
  double mid() const {
    return (mpfr_get_d(lo.get(), MPFR_RNDN) + mpfr_get_d(hi.get(), MPFR_RNDN)) / 2;
  }
  bool contains(double x) const {
    return mpfr_cmp_d(lo.get(), x) <= 0 && mpfr_cmp_d(hi.get(), x) >= 0;
  }
};

inline RInterval iv_add(const RInterval& a, const RInterval& b, mpfr_prec_t prec) {
  RInterval r(prec);
  mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return r;
}

inline RInterval iv_mul(const RInterval& a, const RInterval& b, mpfr_prec_t prec) {
  RInterval r(prec);
  Mpfr t(prec);
  auto consider = [&](mpfr_srcptr x, mpfr_srcptr y, bool first) {
    mpfr_mul(t.get(), x, y, MPFR_RNDD);
    if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), x, y, MPFR_RNDU);
    if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
  };
  consider(a.lo.get(), b.lo.get(), true);
  consider(a.lo.get(), b.hi.get(), false);
  consider(a.hi.get(), b.lo.get(), false);
  consider(a.hi.get(), b.hi.get(), false);
  return r;
}

/// Enclosure of lambda = 2cos(pi/n) at the given precision.
inline RInterval lambda_interval(int n, mpfr_prec_t prec) {
  Mpfr pi_lo(prec), pi_hi(prec), x_lo(prec), x_hi(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_div_ui(x_lo.get(), pi_lo.get(), n, MPFR_RNDD);
  mpfr_div_ui(x_hi.get(), pi_hi.get(), n, MPFR_RNDU);
  // cos is decreasing on [0, pi/3]
  RInterval r(prec);
  mpfr_cos(r.lo.get(), x_hi.get(), MPFR_RNDD);
  mpfr_cos(r.hi.get(), x_lo.get(), MPFR_RNDU);
  mpfr_mul_ui(r.lo.get(), r.lo.get(), 2, MPFR_RNDD);
  mpfr_mul_ui(r.hi.get(), r.hi.get(), 2, MPFR_RNDU);
  return r;
}

/// Enclosure of s = sin(pi/n) at the given precision.
inline RInterval s_interval(int n, mpfr_prec_t prec) {
  Mpfr pi_lo(prec), pi_hi(prec), x_lo(prec), x_hi(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_div_ui(x_lo.get(), pi_lo.get(), n, MPFR_RNDD);
  mpfr_div_ui(x_hi.get(), pi_hi.get(), n, MPFR_RNDU);
  // sin is increasing on [0, pi/3]
  RInterval r(prec);
  mpfr_sin(r.lo.get(), x_lo.get(), MPFR_RNDD);
  mpfr_sin(r.hi.get(), x_hi.get(), MPFR_RNDU);
  return r;
}

/// Horner evaluation of a FieldElement over an enclosure of lambda.
inline RInterval eval_interval(const FieldElement& x, const RInterval& lam, mpfr_prec_t prec) {
  RInterval acc(prec);
  acc.set_zero();
  RInterval cq(prec);
  const auto& c = x.coeffs();
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    acc = iv_mul(acc, lam, prec);
    cq.set_q(c[k]);
    acc = iv_add(acc, cq, prec);
  }
  return acc;
}

inline RInterval eval_interval(const FieldElement& x, mpfr_prec_t prec) {
  return eval_interval(x, lambda_interval(x.ctx().n, prec), prec);
}

constexpr mpfr_prec_t kSignStartPrec = 128;
constexpr mpfr_prec_t kSignMaxPrec = 8192;

/// Exact sign of x under the real embedding lambda = 2cos(pi/n).
/// Symbolic zero test first (the representation is reduced, so zero is literal),
/// then adaptive interval refinement for the nonzero case.
inline int sign(const FieldElement& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.rational_value());
  for (mpfr_prec_t prec = kSignStartPrec; prec <= kSignMaxPrec; prec *= 2) {
    RInterval v = eval_interval(x, prec);
    if (v.positive()) return 1;
    if (v.negative()) return -1;
  }
  throw std::runtime_error("sign(FieldElement): precision cap exceeded for a nonzero element");
}

inline bool less(const FieldElement& a, const FieldElement& b) { return sign(a - b) < 0; }
inline bool less_eq(const FieldElement& a, const FieldElement& b) { return sign(a - b) <= 0; }

/// Double approximation (interval midpoint at 128 bits), for plots and reports.
inline double approx(const FieldElement& x) {
  if (x.is_zero()) return 0.0;
  return eval_interval(x, kSignStartPrec).mid();
}

/// floor of x under the real embedding, exact.
inline mpz_class floor_field(const FieldElement& x) {
  if (x.is_rational()) {
    mpq_class q = x.rational_value();
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
  }
  // irrational, so the enclosure eventually separates from every integer
  for (mpfr_prec_t prec = kSignStartPrec; prec <= kSignMaxPrec; prec *= 2) {
    RInterval v = eval_interval(x, prec);
    mpz_class flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), v.lo.get(), MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), v.hi.get(), MPFR_RNDD);
    if (flo == fhi) return flo;
  }
  throw std::runtime_error("floor_field: precision cap exceeded");
}

}  // namespace dngon
