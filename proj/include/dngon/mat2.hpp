#pragma once

#include "dngon/mod2.hpp"
#include "dngon/quadext.hpp"

namespace dngon {

/// 2x2 matrix over Q(lambda).
struct Mat2 {
  FieldElement a, b, c, d;

  static Mat2 identity(const FieldContext& F) {
    return {FieldElement(F, 1), FieldElement(F, 0), FieldElement(F, 0), FieldElement(F, 1)};
  }

  FieldElement det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend Vec2F operator*(const Mat2& m, const Vec2F& v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
  friend bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }
  friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

  Mat2 inverse() const {
    FieldElement dt = det();
    FieldElement idt = dt.inverse();
    return {d * idt, -(b * idt), -(c * idt), a * idt};
  }

  Mat2 pow(int k) const {
    const FieldContext& F = a.ctx();
    Mat2 r = identity(F);
    Mat2 base = *this;
    bool inv = k < 0;
    if (inv) k = -k;
    for (int i = 0; i < k; ++i) r = r * base;
    return inv ? r.inverse() : r;
  }
};

/// 2x2 matrix over O/2O.
struct Gf2Mat2 {
  const Mod2Context* M;
  Gf2Poly a, b, c, d;

  std::pair<Gf2Poly, Gf2Poly> apply(const Gf2Poly& x, const Gf2Poly& y) const {
    return {M->add(M->mul(a, x), M->mul(b, y)), M->add(M->mul(c, x), M->mul(d, y))};
  }
};

/// Reduction of an integral matrix mod 2; errors on non-integral entries.
inline Gf2Mat2 reduce_mod2(const Mod2Context& M, const Mat2& m) {
  return {&M, reduce_mod2(M, m.a), reduce_mod2(M, m.b), reduce_mod2(M, m.c), reduce_mod2(M, m.d)};
}

/// 2x2 matrix over the quadratic extension (used for the n-gon <-> staircase transport).
struct Mat2Q {
  QuadExtElement a, b, c, d;

  QuadExtElement det() const { return a * d - b * c; }
  friend Vec2Q operator*(const Mat2Q& m, const Vec2Q& v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend Mat2Q operator*(const Mat2Q& m, const Mat2Q& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
};

struct HeckeGens {
  Mat2 T, S, U, R;  // U = T*S; R is the orientation-reversing coordinate swap
};

inline HeckeGens gens(const FieldContext& F) {
  FieldElement zero(F, 0), one(F, 1), lam = FieldElement::lambda(F);
  Mat2 T{one, lam, zero, one};
  Mat2 S{zero, -one, one, zero};
  Mat2 R{zero, one, one, zero};
  return {T, S, T * S, R};
}

}  // namespace dngon
