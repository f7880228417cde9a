#pragma once

#include "dngon/mat2.hpp"
#include "dngon/surface.hpp"

namespace dngon {

/// Double regular n-gon: the right polygon has its center at the origin and a
/// vertex at (1, 0); the left polygon is the point reflection through the
/// midpoint of the shared vertical side. Side k of the right polygon is glued
/// to side k of the left one by translation.
struct DoubleNgon {
  FlatSurface surface;
  int right_poly = 0, left_poly = 1;
  Vec2Q theorem_start;          // vertex (cos 2pi/n, sin 2pi/n)
  int theorem_start_vertex = 1; // index in the right polygon
};

inline DoubleNgon build_double_ngon(const FieldContext& F) {
  if (F.n < 5 || F.n % 2 == 0)
    throw std::invalid_argument("build_double_ngon: n must be odd and >= 5");
  const int n = F.n;
  FieldElement half(F, mpq_class(1, 2));
  QuadExtElement s = QuadExtElement::s(F);

  Polygon right;
  for (int k = 0; k < n; ++k) {
    QuadExtElement x(cheb_c(F, 2 * k) * half);
    QuadExtElement y = s * QuadExtElement(cheb_s(F, 2 * k));
    right.verts.push_back({x, y});
  }
  // reflection center: midpoint of the side between vertices (n-1)/2 and (n+1)/2,
  // i.e. (-cos(pi/n), 0)
  Vec2Q c{QuadExtElement(-(cheb_c(F, 1) * half)), QuadExtElement(F, 0)};
  Vec2Q c2 = {c.x + c.x, c.y + c.y};
  Polygon left;
  left.verts.resize(n);
  for (int k = 0; k < n; ++k) left.verts[k] = c2 - right.verts[k];

  DoubleNgon D;
  D.surface.polys = {right, left};
  for (int k = 0; k < n; ++k) {
    // edge k of right, from v_k to v_{k+1}, onto edge k of left, reversed
    Vec2Q vec = left.verts[(k + 1) % n] - right.verts[k];
    D.surface.gluings.push_back({0, k, 1, k, vec});
  }
  D.surface.marked.push_back({0, {QuadExtElement(F, 0), QuadExtElement(F, 0)}, "center"});
  D.surface.marked.push_back({1, c2, "center-left"});
  D.theorem_start = right.verts[1];
  D.surface.validate();
  return D;
}

/// The quadratic-extension representative of the n-gon -> staircase matrix:
/// P0 = (s, 1 - lambda/2; s, 1 + lambda/2). The customary normalization divides
/// by sin((n-1)pi/2n) = cos(pi/2n), a scalar outside Q(lambda, s); every use
/// here is projective, so this representative is the exact object to compute
/// with.
inline Mat2Q matrix_p(const FieldContext& F) {
  FieldElement half(F, mpq_class(1, 2));
  FieldElement one(F, 1);
  QuadExtElement s = QuadExtElement::s(F);
  FieldElement c = FieldElement::lambda(F) * half;  // cos(pi/n)
  return {s, QuadExtElement(one - c), s, QuadExtElement(one + c)};
}

inline QuadExtElement double_ngon_area(const FieldContext& F) {
  // two regular n-gons of circumradius 1: n * sin(2pi/n) = n * s * lambda
  QuadExtElement s = QuadExtElement::s(F);
  return mpq_class(F.n) * (s * QuadExtElement(FieldElement::lambda(F)));
}

}  // namespace dngon
