#pragma once

#include "dngon/embed.hpp"

namespace dngon {

/// Element a + s*b of Q(lambda)(s), s = sin(pi/n), with s^2 = (4 - lambda^2)/4.
/// s is never in Q(lambda) for odd n, so the representation is unique and the
/// norm a^2 - s^2 b^2 vanishes only at zero.
class QuadExtElement {
public:
  QuadExtElement() = default;
  QuadExtElement(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {}
  explicit QuadExtElement(const FieldElement& a) : a_(a), b_(a.ctx(), 0) {}
  QuadExtElement(const FieldContext& F, mpq_class q) : a_(F, std::move(q)), b_(F, 0) {}

  static QuadExtElement s(const FieldContext& F) { return {FieldElement(F, 0), FieldElement(F, 1)}; }
  static QuadExtElement s_squared_value(const FieldContext& F) {
    FieldElement lam = FieldElement::lambda(F);
    return QuadExtElement((FieldElement(F, 4) - lam * lam) * mpq_class(1, 4));
  }

  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldContext& ctx() const { return a_.ctx(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_field() const { return b_.is_zero(); }  // lies in Q(lambda)
  bool is_integral() const { return a_.is_integral() && b_.is_integral(); }

  friend QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadExtElement operator-(const QuadExtElement& x) { return {-x.a_, -x.b_}; }
  friend QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y) {
    const FieldContext& F = x.ctx();
    FieldElement s2 = s_squared_value(F).a();
    return {x.a_ * y.a_ + s2 * (x.b_ * y.b_), x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend QuadExtElement operator*(const QuadExtElement& x, const mpq_class& q) {
    return {x.a_ * q, x.b_ * q};
  }
  friend QuadExtElement operator*(const mpq_class& q, const QuadExtElement& x) { return x * q; }

  QuadExtElement inverse() const {
    if (is_zero()) throw std::domain_error("QuadExtElement: division by zero");
    FieldElement s2 = s_squared_value(ctx()).a();
    FieldElement norm = a_ * a_ - s2 * (b_ * b_);
    // norm = (a + sb)(a - sb) and s is irrational over Q(lambda), so norm != 0
    FieldElement ninv = norm.inverse();
    return {a_ * ninv, -(b_ * ninv)};
  }
  friend QuadExtElement operator/(const QuadExtElement& x, const QuadExtElement& y) {
    return x * y.inverse();
  }

  friend bool operator==(const QuadExtElement& x, const QuadExtElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExtElement& x, const QuadExtElement& y) { return !(x == y); }

  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    return "(" + a_.to_string() + ") + s*(" + b_.to_string() + ")";
  }

private:
  FieldElement a_, b_;
};

inline RInterval eval_interval(const QuadExtElement& x, mpfr_prec_t prec) {
  RInterval lam = lambda_interval(x.ctx().n, prec);
  RInterval s = s_interval(x.ctx().n, prec);
  RInterval va = eval_interval(x.a(), lam, prec);
  RInterval vb = eval_interval(x.b(), lam, prec);
  return iv_add(va, iv_mul(s, vb, prec), prec);
}

/// Exact sign of a + s*b under the real embedding. The zero decision is symbolic:
/// both components zero, or the norm a^2 - s^2 b^2 vanishes with opposite
/// component signs (kept for completeness; the norm cannot vanish on nonzero
/// input since s is irrational over Q(lambda)).
inline int sign(const QuadExtElement& x) {
  if (x.is_zero()) return 0;
  if (x.b().is_zero()) return sign(x.a());
  if (x.a().is_zero()) return sign(x.b());  // s > 0
  FieldElement s2 = QuadExtElement::s_squared_value(x.ctx()).a();
  FieldElement norm = x.a() * x.a() - s2 * (x.b() * x.b());
  if (norm.is_zero()) {
    int sa = sign(x.a());
    return (sa == sign(x.b())) ? sa : 0;
  }
  for (mpfr_prec_t prec = kSignStartPrec; prec <= kSignMaxPrec; prec *= 2) {
    RInterval v = eval_interval(x, prec);
    if (v.positive()) return 1;
    if (v.negative()) return -1;
  }
  throw std::runtime_error("sign(QuadExtElement): precision cap exceeded for a nonzero element");
}

inline double approx(const QuadExtElement& x) {
  if (x.is_zero()) return 0.0;
  return eval_interval(x, kSignStartPrec).mid();
}

inline bool less(const QuadExtElement& a, const QuadExtElement& b) { return sign(a - b) < 0; }

/// Simple 2-vector over an exact coordinate type.
template <class T>
struct Vec2 {
  T x, y;
};

template <class T>
Vec2<T> operator+(const Vec2<T>& a, const Vec2<T>& b) {
  return {a.x + b.x, a.y + b.y};
}
template <class T>
Vec2<T> operator-(const Vec2<T>& a, const Vec2<T>& b) {
  return {a.x - b.x, a.y - b.y};
}
template <class T>
Vec2<T> operator-(const Vec2<T>& a) {
  return {-a.x, -a.y};
}
template <class T, class S>
Vec2<T> operator*(const S& s, const Vec2<T>& a) {
  return {s * a.x, s * a.y};
}
template <class T>
bool operator==(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x == b.x && a.y == b.y;
}
template <class T>
bool operator!=(const Vec2<T>& a, const Vec2<T>& b) {
  return !(a == b);
}
template <class T>
T cross(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.y - a.y * b.x;
}
template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.x + a.y * b.y;
}

using Vec2F = Vec2<FieldElement>;
using Vec2Q = Vec2<QuadExtElement>;

inline Vec2Q to_quad(const Vec2F& v) { return {QuadExtElement(v.x), QuadExtElement(v.y)}; }

}  // namespace dngon
