#pragma once

#include "dngon/ngon.hpp"
#include "dngon/staircase.hpp"

#include <optional>

namespace dngon {

enum class EventKind { Crossing, VertexHit, MarkedHit };
enum class TraceTermination { VertexHit, Budget, MarkedHit };

struct TraceEvent {
  EventKind kind;
  int poly;       // polygon in which the event happens
  int index;      // edge index (crossing), vertex index, or marked-point index
  Vec2Q pos;      // exact event position in that polygon's chart
};

struct TraceResult {
  std::vector<TraceEvent> events;
  TraceTermination termination;
  int crossings = 0;
  std::optional<QuadExtElement> length2;  // exact squared length when requested

  bool hit_marked(const std::string& label, const FlatSurface& S) const {
    for (const TraceEvent& e : events)
      if (e.kind == EventKind::MarkedHit && S.marked[e.index].label == label) return true;
    return false;
  }
};

struct TraceOptions {
  bool stop_at_marked = false;
  bool accumulate_length = false;
};

/// Exact geodesic trace: repeatedly find the exit edge of the current polygon
/// by sign tests, detect exact vertex coincidences (all vertices are
/// singularities), record marked-point hits, and cross via the gluing
/// translation. No tolerances anywhere.
inline TraceResult trace(const FlatSurface& S, int poly, Vec2Q pos, const Vec2Q& dir0,
                         int max_crossings, TraceOptions opt = {}) {
  if (dir0.x.is_zero() && dir0.y.is_zero()) throw std::invalid_argument("trace: zero direction");
  if (!S.contains(poly, pos)) throw std::invalid_argument("trace: start not in start polygon");
  const FieldContext& F = dir0.x.ctx();
  Vec2Q dir = dir0;
  TraceResult out;
  out.termination = TraceTermination::Budget;

  QuadExtElement dd = dot(dir, dir);
  // chart segments are all parallel, so the total displacement determines the
  // exact squared length; per-segment squares would not add up
  Vec2Q disp{QuadExtElement(F, 0), QuadExtElement(F, 0)};
  auto add_len = [&](const Vec2Q& from, const Vec2Q& to) {
    if (!opt.accumulate_length) return;
    disp = disp + (to - from);
    out.length2 = dot(disp, disp);
  };
  if (opt.accumulate_length) out.length2 = QuadExtElement(F, 0);

  while (true) {
    const Polygon& P = S.polys[poly];
    const int k = P.size();

    // candidate exit: smallest positive parameter over all edges
    bool have = false;
    QuadExtElement best_t(F, 0);
    int best_edge = -1;
    Vec2Q best_pos = pos;
    auto consider = [&](const QuadExtElement& t, int edge, const Vec2Q& at) {
      if (sign(t) <= 0) return;
      if (!have || sign(t - best_t) < 0) {
        have = true;
        best_t = t;
        best_edge = edge;
        best_pos = at;
      }
    };
    for (int e = 0; e < k; ++e) {
      Vec2Q a = P.edge_start(e), b = P.edge_end(e);
      Vec2Q ab = b - a;
      QuadExtElement den = cross(ab, dir);
      QuadExtElement num = cross(ab, a - pos);
      if (den.is_zero()) {
        if (!num.is_zero()) continue;  // parallel, off the line
        // running along this edge: next stop is an endpoint ahead
        for (const Vec2Q& v : {a, b}) {
          QuadExtElement t = dot(dir, v - pos) / dd;
          if (sign(t) > 0) consider(t, e, v);
        }
        continue;
      }
      QuadExtElement t = num / den;
      if (sign(t) <= 0) continue;
      Vec2Q at = pos + Vec2Q{t * dir.x, t * dir.y};
      // within the closed edge?
      QuadExtElement u = dot(ab, at - a);
      if (sign(u) < 0 || sign(dot(ab, ab) - u) < 0) continue;
      consider(t, e, at);
    }
    if (!have) throw std::logic_error("trace: no exit edge (direction does not leave the polygon)");

    // marked points strictly before the exit
    std::vector<std::pair<QuadExtElement, int>> hits;
    for (size_t mi = 0; mi < S.marked.size(); ++mi) {
      if (S.marked[mi].poly != poly) continue;
      Vec2Q dm = S.marked[mi].pos - pos;
      if (dm.x.is_zero() && dm.y.is_zero()) continue;  // starting on it
      if (!cross(dir, dm).is_zero()) continue;
      QuadExtElement t = dot(dir, dm) / dd;
      if (sign(t) <= 0 || sign(best_t - t) < 0) continue;
      hits.emplace_back(t, static_cast<int>(mi));
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return sign(a.first - b.first) < 0; });
    for (auto& [t, mi] : hits) {
      Vec2Q at = S.marked[mi].pos;
      out.events.push_back({EventKind::MarkedHit, poly, mi, at});
      if (opt.stop_at_marked) {
        add_len(pos, at);
        out.termination = TraceTermination::MarkedHit;
        return out;
      }
    }

    // vertex coincidence terminates the trace
    int vertex = -1;
    for (int v = 0; v < k; ++v)
      if (P.verts[v] == best_pos) vertex = v;
    if (vertex >= 0) {
      add_len(pos, best_pos);
      out.events.push_back({EventKind::VertexHit, poly, vertex, best_pos});
      out.termination = TraceTermination::VertexHit;
      return out;
    }

    if (out.crossings >= max_crossings) {
      out.termination = TraceTermination::Budget;
      return out;
    }
    out.events.push_back({EventKind::Crossing, poly, best_edge, best_pos});
    out.crossings++;
    add_len(pos, best_pos);
    FlatSurface::EdgeRef next = S.partner(poly, best_edge);
    pos = best_pos + next.vec;
    poly = next.poly;
  }
}

/// The distinguished direction through the central point of the double n-gon,
/// (X, Y) = (1 + 2cos(2pi/n)(1 + cos(pi/n)), 2 sin(2pi/n)(1 - cos(pi/n))), and
/// its staircase transport (Xt, Yt) = (-1 - 3l + l^2 + l^3, -1 + l + l^2).
struct TheoremDirection {
  Vec2Q ngon;       // (X, Y), exact over the quadratic extension
  Vec2F staircase;  // (Xt, Yt), exact over Q(lambda)
};

inline TheoremDirection theorem_direction(const FieldContext& F) {
  if (F.n < 7 || F.n % 2 == 0)
    throw std::invalid_argument("theorem_direction: n must be odd and >= 7");
  FieldElement one(F, 1), half(F, mpq_class(1, 2));
  FieldElement lam = FieldElement::lambda(F);
  FieldElement c1 = lam * half;              // cos(pi/n)
  FieldElement c2 = cheb_c(F, 2) * half;     // cos(2pi/n)
  QuadExtElement s = QuadExtElement::s(F);
  QuadExtElement s2 = s * QuadExtElement(cheb_s(F, 2));  // sin(2pi/n)

  QuadExtElement X(one + 2 * (c2 * (one + c1)));
  QuadExtElement Y = mpq_class(2) * (s2 * QuadExtElement(one - c1));

  // scaled transport: (X, Y) -> (X - qY, X + qY), q = (cos(pi/n) + 1)/sin(pi/n)
  QuadExtElement q = QuadExtElement(c1 + one) * s.inverse();
  QuadExtElement Xt = X - q * Y;
  QuadExtElement Yt = X + q * Y;
  if (!Xt.is_field() || !Yt.is_field())
    throw std::logic_error("theorem_direction: transported direction left Q(lambda)");

  FieldElement xt_want = -one - 3 * lam + lam * lam + lam * lam * lam;
  FieldElement yt_want = -one + lam + lam * lam;
  // proportionality over Q(lambda); in fact equality on the nose
  if (Xt.a() * yt_want != Yt.a() * xt_want)
    throw std::logic_error("theorem_direction: transport is not proportional to the expected one");
  return {{X, Y}, {Xt.a(), Yt.a()}};
}

/// Transport along the matrix T S T^{-1} (an involution in PSL_2).
inline Vec2F tst_transport(const FieldContext& F, const Vec2F& v) {
  if (v.x.is_zero() && v.y.is_zero()) throw std::invalid_argument("tst_transport: zero direction");
  HeckeGens G = gens(F);
  Mat2 M = G.T * G.S * G.T.inverse();
  return M * v;
}
inline Vec2F tst_transport_inv(const FieldContext& F, const Vec2F& v) {
  HeckeGens G = gens(F);
  Mat2 M = (G.T * G.S * G.T.inverse()).inverse();
  return M * v;
}

/// Trace on the double n-gon from (cos 2pi/n, sin 2pi/n) in the distinguished
/// direction; the separatrix records an exact marked-point hit at the
/// right-polygon center (0, 0).
inline TraceResult theorem_separatrix_trace(const FieldContext& F, int max_crossings) {
  if (max_crossings <= 0) throw std::invalid_argument("theorem_separatrix_trace: zero budget");
  DoubleNgon D = build_double_ngon(F);
  TheoremDirection dir = theorem_direction(F);
  // the germ at the corner of the right polygon at (cos 2pi/n, sin 2pi/n)
  // realizes the projective direction [X : Y] by its representative -(X, Y)
  return trace(D.surface, D.right_poly, D.theorem_start, -dir.ngon, max_crossings);
}

struct SaddleHit {
  int germ_poly;
  Vec2Q germ_vertex;
  Vec2Q endpoint;
  int crossings;
};

/// Bounded search for a saddle connection in the given direction: trace from
/// every vertex germ the direction enters and report the first vertex hit.
inline std::optional<SaddleHit> saddle_connection_search(const FlatSurface& S, const Vec2Q& dir,
                                                         int budget) {
  if (dir.x.is_zero() && dir.y.is_zero())
    throw std::invalid_argument("saddle_connection_search: zero direction");
  for (size_t p = 0; p < S.polys.size(); ++p) {
    const Polygon& P = S.polys[p];
    const int k = P.size();
    for (int v = 0; v < k; ++v) {
      // direction must enter the interior cone at vertex v
      Vec2Q e_out = P.edge_vec(v);                       // edge v -> v+1
      Vec2Q e_in = P.verts[(v + k - 1) % k] - P.verts[v];  // edge v -> v-1
      if (sign(cross(e_out, dir)) < 0) continue;
      if (sign(cross(dir, e_in)) < 0) continue;
      TraceResult r = trace(S, static_cast<int>(p), P.verts[v], dir, budget);
      if (r.termination == TraceTermination::VertexHit)
        return SaddleHit{static_cast<int>(p), P.verts[v], r.events.back().pos, r.crossings};
    }
  }
  return std::nullopt;
}

}  // namespace dngon
