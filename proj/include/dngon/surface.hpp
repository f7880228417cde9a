#pragma once

#include "dngon/quadext.hpp"

#include <string>
#include <vector>

namespace dngon {

/// Convex polygon with exact vertices, counterclockwise.
struct Polygon {
  std::vector<Vec2Q> verts;
  int size() const { return static_cast<int>(verts.size()); }
  Vec2Q edge_start(int e) const { return verts[e]; }
  Vec2Q edge_end(int e) const { return verts[(e + 1) % verts.size()]; }
  Vec2Q edge_vec(int e) const { return edge_end(e) - edge_start(e); }
};

/// Identification of edge ea of polygon pa with edge eb of polygon pb:
/// translating edge ea by vec gives edge eb traversed backwards.
struct Gluing {
  int pa, ea, pb, eb;
  Vec2Q vec;
};

struct MarkedPoint {
  int poly;
  Vec2Q pos;
  std::string label;
};

template <class M>
concept Mat2QLike = requires(const M& m, const Vec2Q& v) {
  { m * v } -> std::convertible_to<Vec2Q>;
  { m.det() } -> std::convertible_to<QuadExtElement>;
};

struct FlatSurface {
  std::vector<Polygon> polys;
  std::vector<Gluing> gluings;
  std::vector<MarkedPoint> marked;

  struct EdgeRef {
    int poly, edge;
    Vec2Q vec;  // translation from the queried edge onto its partner
  };

  /// Partner of edge e of polygon p.
  EdgeRef partner(int p, int e) const {
    for (const Gluing& g : gluings) {
      if (g.pa == p && g.ea == e) return {g.pb, g.eb, g.vec};
      if (g.pb == p && g.eb == e) return {g.pa, g.ea, -g.vec};
    }
    throw std::logic_error("FlatSurface::partner: unglued edge");
  }

  /// Exact structural checks: every edge glued exactly once; glued edges are
  /// parallel, equal length, opposite orientation; the translation is exact.
  void validate() const {
    std::vector<std::vector<int>> count(polys.size());
    for (size_t p = 0; p < polys.size(); ++p) count[p].assign(polys[p].size(), 0);
    for (const Gluing& g : gluings) {
      count[g.pa][g.ea]++;
      count[g.pb][g.eb]++;
      const Polygon& A = polys[g.pa];
      const Polygon& B = polys[g.pb];
      if (A.edge_start(g.ea) + g.vec != B.edge_end(g.eb) ||
          A.edge_end(g.ea) + g.vec != B.edge_start(g.eb))
        throw std::logic_error("FlatSurface::validate: gluing translation mismatch");
    }
    for (size_t p = 0; p < polys.size(); ++p)
      for (int c : count[p])
        if (c != 1) throw std::logic_error("FlatSurface::validate: edge not glued exactly once");
    for (const Polygon& poly : polys) {
      const int k = poly.size();
      if (k < 3) throw std::logic_error("FlatSurface::validate: degenerate polygon");
      for (int e = 0; e < k; ++e) {
        QuadExtElement c = cross(poly.edge_vec(e), poly.edge_vec((e + 1) % k));
        if (sign(c) <= 0) throw std::logic_error("FlatSurface::validate: polygon not strictly convex CCW");
      }
    }
  }

  /// Point-in-polygon (closed) via exact orientation tests.
  bool contains(int p, const Vec2Q& pt) const {
    const Polygon& poly = polys[p];
    for (int e = 0; e < poly.size(); ++e)
      if (sign(cross(poly.edge_vec(e), pt - poly.edge_start(e))) < 0) return false;
    return true;
  }

  QuadExtElement area() const {
    if (polys.empty()) throw std::logic_error("FlatSurface::area: empty surface");
    const FieldContext& F = polys[0].verts[0].x.ctx();
    QuadExtElement two(F, 2);
    QuadExtElement acc(F, 0);
    for (const Polygon& poly : polys)
      for (int e = 0; e < poly.size(); ++e) acc = acc + cross(poly.edge_start(e), poly.edge_end(e));
    return acc / two;
  }

  /// Apply a linear map with nonzero determinant to the whole surface.
  /// Orientation-reversing maps flip polygon traversal; vertex order is then
  /// reversed to restore CCW and gluing edge indices are remapped.
  FlatSurface transformed(const Mat2QLike auto& m) const {
    bool flip = sign(m.det()) < 0;
    FlatSurface out;
    out.polys.resize(polys.size());
    for (size_t p = 0; p < polys.size(); ++p) {
      const int k = polys[p].size();
      out.polys[p].verts.resize(k);
      for (int i = 0; i < k; ++i) {
        Vec2Q v = m * polys[p].verts[i];
        out.polys[p].verts[flip ? (k - 1 - i) % k : i] = v;
      }
    }
    auto remap = [&](int p, int e) {
      if (!flip) return e;
      int k = polys[p].size();
      return ((k - 2 - e) % k + k) % k;
    };
    for (const Gluing& g : gluings) {
      Vec2Q vec = m * g.vec;
      out.gluings.push_back({g.pa, remap(g.pa, g.ea), g.pb, remap(g.pb, g.eb), vec});
    }
    for (const MarkedPoint& mp : marked) out.marked.push_back({mp.poly, m * mp.pos, mp.label});
    return out;
  }
};

}  // namespace dngon
