#pragma once

#include "dngon/mat2.hpp"
#include "dngon/surface.hpp"

#include <algorithm>
#include <array>

namespace dngon {

/// The staircase model S_n as a planar template:
/// rectangles R_1..R_{n-2}, R_{(n-1)/2} the unit square with its bottom-left
/// corner at the origin, the chain zigzagging right/down for increasing index
/// and up/left for decreasing index. Side lengths come from the Q-recurrence
/// Q_0 = Q_1 = 1, Q_{i+1} = lambda Q_i - Q_{i-1}.
class Staircase {
public:
  struct Rect {
    FieldElement x0, y0, x1, y1;
    FieldElement width() const { return x1 - x0; }
    FieldElement height() const { return y1 - y0; }
    Vec2F corner(int j) const {
      switch (j & 3) {
        case 0: return {x0, y0};
        case 1: return {x1, y0};
        case 2: return {x1, y1};
        default: return {x0, y1};
      }
    }
  };

  /// Maximal axis strip = one cylinder. Transverse interval [t_lo, t_hi] is
  /// the cylinder height; axis interval [a_lo, a_hi] the circumference.
  struct Strip {
    bool horizontal;
    FieldElement t_lo, t_hi, a_lo, a_hi;
    std::vector<int> rects;
    FieldElement height() const { return t_hi - t_lo; }
    FieldElement width() const { return a_hi - a_lo; }
  };

  struct EdgeGluing {
    int ra, ea, rb, eb;
    Vec2F vec;
  };

  explicit Staircase(const FieldContext& F) : F_(&F), n_(F.n), m_((F.n - 1) / 2) {
    if (n_ < 5 || n_ % 2 == 0)
      throw std::invalid_argument("Staircase: n must be odd and >= 5");
    build_rects();
    build_strips();
    build_gluings();
    build_s_matching();
  }

  const FieldContext& ctx() const { return *F_; }
  int n() const { return n_; }
  int m() const { return m_; }
  /// side length Q_i(lambda)
  const FieldElement& Q(int i) const { return Q_.at(i); }
  /// template rectangle R_i, 1 <= i <= n-2
  const Rect& rect(int i) const { return rects_.at(i - 1); }
  int rect_count() const { return static_cast<int>(rects_.size()); }
  const std::vector<Strip>& hstrips() const { return hstrips_; }  // C_1..C_m by descending height
  const std::vector<Strip>& vstrips() const { return vstrips_; }
  const std::vector<EdgeGluing>& gluings() const { return gluings_; }

  bool in_template(const Vec2F& p) const { return rect_index_of(p) >= 0; }

  /// 0-based index of a rectangle whose closed box contains p; -1 if outside.
  int rect_index_of(const Vec2F& p) const {
    for (size_t r = 0; r < rects_.size(); ++r) {
      const Rect& R = rects_[r];
      if (sign(p.x - R.x0) >= 0 && sign(R.x1 - p.x) >= 0 && sign(p.y - R.y0) >= 0 &&
          sign(R.y1 - p.y) >= 0)
        return static_cast<int>(r);
    }
    return -1;
  }

  /// Lexicographically smallest representative of p's gluing class.
  Vec2F canonical(const Vec2F& p) const {
    if (!in_template(p)) throw std::invalid_argument("Staircase::canonical: point outside template");
    std::vector<Vec2F> seen{p};
    std::vector<Vec2F> frontier{p};
    while (!frontier.empty()) {
      std::vector<Vec2F> next;
      for (const Vec2F& q : frontier) {
        for (const EdgeGluing& g : gluings_) {
          auto push = [&](const Vec2F& img) {
            for (const Vec2F& s : seen)
              if (s == img) return;
            seen.push_back(img);
            next.push_back(img);
          };
          if (on_edge(g.ra, g.ea, q)) push(q + g.vec);
          if (on_edge(g.rb, g.eb, q)) push(q - g.vec);
        }
      }
      frontier = std::move(next);
    }
    Vec2F best = seen[0];
    for (const Vec2F& q : seen)
      if (lex_less(q, best)) best = q;
    return best;
  }

  /// Horizontal multitwist to the k-th power: fixes each cylinder floor,
  /// shears by lambda per unit height, renormalizes by multiples of the width.
  Vec2F act_T(const Vec2F& p, int k) const {
    const Strip& s = hstrip_of(p);
    FieldElement lam = FieldElement::lambda(*F_);
    FieldElement x = p.x + mpq_class(k) * lam * (p.y - s.t_lo);
    FieldElement t = (x - s.a_lo) * s.width().inverse();
    mpz_class fl = floor_field(t);
    x = x - mpq_class(fl) * s.width();
    return canonical({x, p.y});
  }

  /// Derivative-S affine diffeomorphism: rotate the template by 90 degrees and
  /// re-place each rotated rectangle by its unique matching translation.
  Vec2F act_S(const Vec2F& p) const {
    int r = rect_index_of(p);
    if (r < 0) throw std::invalid_argument("Staircase::act_S: point outside template");
    Vec2F sp{-p.y, p.x};
    return canonical(sp + s_translation_[r]);
  }

  /// Orientation-reversing symmetry along the diagonal.
  Vec2F act_R(const Vec2F& p) const {
    if (!in_template(p)) throw std::invalid_argument("Staircase::act_R: point outside template");
    return canonical({p.y, p.x});
  }

  /// (distance to the cylinder floor) / (cylinder height)
  FieldElement height_ratio(const Vec2F& p, const Strip& s) const {
    const FieldElement& t = s.horizontal ? p.y : p.x;
    return (t - s.t_lo) * s.height().inverse();
  }
  bool rational_height(const Vec2F& p, const Strip& s) const {
    return height_ratio(p, s).is_rational();
  }

  /// Rational height in every axis cylinder characterizes periodic points;
  /// axis-rational candidates are retested after horizontal twists, up to the
  /// move budget, before the test concludes periodic.
  bool periodic_point_test(Vec2F p, int budget = 8) const {
    for (int round = 0;; ++round) {
      for (const Strip& s : hstrips_)
        if (contains(s, p) && !rational_height(p, s)) return false;
      for (const Strip& s : vstrips_)
        if (contains(s, p) && !rational_height(p, s)) return false;
      if (round >= budget) return true;
      p = act_T(p, 1);
    }
  }

  bool contains(const Strip& s, const Vec2F& p) const {
    const FieldElement& t = s.horizontal ? p.y : p.x;
    const FieldElement& a = s.horizontal ? p.x : p.y;
    return sign(t - s.t_lo) >= 0 && sign(s.t_hi - t) >= 0 && sign(a - s.a_lo) >= 0 &&
           sign(s.a_hi - a) >= 0;
  }

  const Strip& hstrip_of(const Vec2F& p) const {
    for (const Strip& s : hstrips_)
      if (contains(s, p)) return s;
    throw std::invalid_argument("Staircase: point outside template");
  }

  FieldElement area() const {
    FieldElement a(*F_, 0);
    for (const Rect& r : rects_) a = a + r.width() * r.height();
    return a;
  }

  /// Embed the template as a translation surface over the quadratic extension.
  FlatSurface to_flat() const {
    FlatSurface S;
    for (const Rect& r : rects_) {
      Polygon poly;
      for (int j = 0; j < 4; ++j) {
        Vec2F c = r.corner(j);
        poly.verts.push_back({QuadExtElement(c.x), QuadExtElement(c.y)});
      }
      S.polys.push_back(std::move(poly));
    }
    for (const EdgeGluing& g : gluings_)
      S.gluings.push_back({g.ra, g.ea, g.rb, g.eb, to_quad(g.vec)});
    return S;
  }

  /// Exactness check used by tests: the two representatives of a glued boundary
  /// point map to the same canonical point under a given action.
  template <class Fn>
  bool action_respects_gluings(Fn&& act, const Vec2F& p) const {
    Vec2F base = canonical(p);
    for (const EdgeGluing& g : gluings_) {
      if (on_edge(g.ra, g.ea, p)) {
        if (act(p + g.vec) != act(base)) return false;
      }
      if (on_edge(g.rb, g.eb, p)) {
        if (act(p - g.vec) != act(base)) return false;
      }
    }
    return true;
  }

private:
  const FieldContext* F_;
  int n_, m_;
  std::vector<FieldElement> Q_;        // Q_0 .. Q_{m+1}
  std::vector<Rect> rects_;            // rects_[i] = R_{i+1}
  std::vector<Strip> hstrips_, vstrips_;
  std::vector<EdgeGluing> gluings_;
  std::vector<Vec2F> s_translation_;   // re-placement translation per rect for act_S
  std::vector<int> s_target_;          // image rect index per rect

  void build_rects() {
    FieldElement lam = FieldElement::lambda(*F_);
    Q_.assign(m_ + 2, FieldElement(*F_, 0));
    Q_[0] = FieldElement(*F_, 1);
    if (m_ >= 1) Q_[1] = FieldElement(*F_, 1);
    for (int i = 1; i <= m_; ++i) Q_[i + 1] = lam * Q_[i] - Q_[i - 1];

    rects_.assign(n_ - 2, Rect{});
    FieldElement zero(*F_, 0), one(*F_, 1);
    rects_[m_ - 1] = {zero, zero, one, one};  // R_m is the unit square
    // increasing indices: attach right for odd offsets, below for even offsets
    for (int i = 1; m_ + i <= n_ - 2; ++i) {
      const Rect& prev = rects_[m_ + i - 2];
      Rect r;
      if (i % 2 == 1) {
        r = {prev.x1, prev.y0, prev.x1 + Q_[i + 1], prev.y1};
      } else {
        r = {prev.x0, prev.y0 - Q_[i + 1], prev.x1, prev.y0};
      }
      rects_[m_ + i - 1] = r;
    }
    // decreasing indices: attach above for odd offsets, left for even offsets
    for (int i = 1; m_ - i >= 1; ++i) {
      const Rect& prev = rects_[m_ - i];
      Rect r;
      if (i % 2 == 1) {
        r = {prev.x0, prev.y1, prev.x1, prev.y1 + Q_[i + 1]};
      } else {
        r = {prev.x0 - Q_[i + 1], prev.y0, prev.x0, prev.y1};
      }
      rects_[m_ - i - 1] = r;
    }
  }

  void build_strips() {
    hstrips_ = sweep(true);
    vstrips_ = sweep(false);
    if (static_cast<int>(hstrips_.size()) != m_ || static_cast<int>(vstrips_.size()) != m_)
      throw std::logic_error("Staircase: cylinder count is not (n-1)/2");
    auto by_height_desc = [&](const Strip& a, const Strip& b) {
      int c = sign(a.height() - b.height());
      if (c != 0) return c > 0;
      return sign(a.t_lo - b.t_lo) < 0;
    };
    std::stable_sort(hstrips_.begin(), hstrips_.end(), by_height_desc);
    std::stable_sort(vstrips_.begin(), vstrips_.end(), by_height_desc);
  }

  std::vector<Strip> sweep(bool horizontal) const {
    auto lo_t = [&](const Rect& r) { return horizontal ? r.y0 : r.x0; };
    auto hi_t = [&](const Rect& r) { return horizontal ? r.y1 : r.x1; };
    auto lo_a = [&](const Rect& r) { return horizontal ? r.x0 : r.y0; };
    auto hi_a = [&](const Rect& r) { return horizontal ? r.x1 : r.y1; };

    std::vector<FieldElement> cuts;
    auto add_cut = [&](const FieldElement& v) {
      for (const FieldElement& c : cuts)
        if (c == v) return;
      cuts.push_back(v);
    };
    for (const Rect& r : rects_) {
      add_cut(lo_t(r));
      add_cut(hi_t(r));
    }
    std::sort(cuts.begin(), cuts.end(), [](const FieldElement& a, const FieldElement& b) {
      return sign(a - b) < 0;
    });

    std::vector<Strip> strips;
    for (size_t b = 0; b + 1 < cuts.size(); ++b) {
      Strip s;
      s.horizontal = horizontal;
      s.t_lo = cuts[b];
      s.t_hi = cuts[b + 1];
      std::vector<std::pair<FieldElement, int>> run;  // (a_lo, rect index)
      for (size_t r = 0; r < rects_.size(); ++r) {
        if (sign(lo_t(rects_[r]) - s.t_lo) <= 0 && sign(hi_t(rects_[r]) - s.t_hi) >= 0)
          run.emplace_back(lo_a(rects_[r]), static_cast<int>(r));
      }
      if (run.empty()) throw std::logic_error("Staircase: empty band");
      std::sort(run.begin(), run.end(), [](const auto& a, const auto& b) {
        return sign(a.first - b.first) < 0;
      });
      for (size_t i = 0; i + 1 < run.size(); ++i)
        if (hi_a(rects_[run[i].second]) != run[i + 1].first)
          throw std::logic_error("Staircase: band is not contiguous");
      for (auto& [a0, idx] : run) s.rects.push_back(idx);
      s.a_lo = run.front().first;
      s.a_hi = hi_a(rects_[run.back().second]);
      strips.push_back(std::move(s));
    }
    return strips;
  }

  void build_gluings() {
    // interior shared edges: right/left and top/bottom full-edge neighbors
    auto find_right_neighbor = [&](const Rect& r) -> int {
      for (size_t j = 0; j < rects_.size(); ++j) {
        const Rect& o = rects_[j];
        if (o.x0 == r.x1 && o.y0 == r.y0 && o.y1 == r.y1) return static_cast<int>(j);
      }
      return -1;
    };
    auto find_top_neighbor = [&](const Rect& r) -> int {
      for (size_t j = 0; j < rects_.size(); ++j) {
        const Rect& o = rects_[j];
        if (o.y0 == r.y1 && o.x0 == r.x0 && o.x1 == r.x1) return static_cast<int>(j);
      }
      return -1;
    };
    FieldElement zero(*F_, 0);
    for (size_t r = 0; r < rects_.size(); ++r) {
      int nr = find_right_neighbor(rects_[r]);
      if (nr >= 0) gluings_.push_back({static_cast<int>(r), 1, nr, 3, {zero, zero}});
      int nt = find_top_neighbor(rects_[r]);
      if (nt >= 0) gluings_.push_back({static_cast<int>(r), 2, nt, 0, {zero, zero}});
    }
    // strip closures
    for (const Strip& s : hstrips_) {
      int left = s.rects.front(), right = s.rects.back();
      gluings_.push_back({left, 3, right, 1, {s.width(), zero}});
    }
    for (const Strip& s : vstrips_) {
      int bottom = s.rects.front(), top = s.rects.back();
      gluings_.push_back({bottom, 0, top, 2, {zero, s.width()}});
    }
    // each of the 4(n-2) edges must appear exactly once
    std::vector<std::array<int, 4>> count(rects_.size(), {0, 0, 0, 0});
    for (const EdgeGluing& g : gluings_) {
      count[g.ra][g.ea]++;
      count[g.rb][g.eb]++;
    }
    for (const auto& c : count)
      for (int e = 0; e < 4; ++e)
        if (c[e] != 1) throw std::logic_error("Staircase: edge gluing bookkeeping failed");
    // exact translation check
    for (const EdgeGluing& g : gluings_) {
      Vec2F a0 = edge_start(g.ra, g.ea), a1 = edge_end(g.ra, g.ea);
      Vec2F b0 = edge_start(g.rb, g.eb), b1 = edge_end(g.rb, g.eb);
      if (a0 + g.vec != b1 || a1 + g.vec != b0)
        throw std::logic_error("Staircase: gluing translation mismatch");
    }
  }

  void build_s_matching() {
    s_translation_.assign(rects_.size(), Vec2F{FieldElement(*F_, 0), FieldElement(*F_, 0)});
    s_target_.assign(rects_.size(), -1);
    for (size_t r = 0; r < rects_.size(); ++r) {
      const Rect& R = rects_[r];
      FieldElement w = R.height(), h = R.width();  // rotated dimensions
      int target = -1;
      for (size_t j = 0; j < rects_.size(); ++j) {
        if (rects_[j].width() == w && rects_[j].height() == h) {
          if (target >= 0) throw std::logic_error("Staircase: ambiguous act_S matching");
          target = static_cast<int>(j);
        }
      }
      if (target < 0) throw std::logic_error("Staircase: no act_S matching");
      s_target_[r] = target;
      // rotated box is [-y1, -y0] x [x0, x1]
      s_translation_[r] = {rects_[target].x0 + R.y1, rects_[target].y0 - R.x0};
      if (!s_translation_[r].x.is_integral() || !s_translation_[r].y.is_integral())
        throw std::logic_error("Staircase: act_S translation not in Z[lambda]^2");
    }
    // gluing compatibility: image edges of glued edges are glued with the image translation
    for (const EdgeGluing& g : gluings_) {
      int ia = s_target_[g.ra], ib = s_target_[g.rb];
      int ea = (g.ea + 1) % 4, eb = (g.eb + 1) % 4;
      Vec2F vec{-g.vec.y + s_translation_[g.rb].x - s_translation_[g.ra].x,
                g.vec.x + s_translation_[g.rb].y - s_translation_[g.ra].y};
      bool found = false;
      for (const EdgeGluing& h : gluings_) {
        if (h.ra == ia && h.ea == ea && h.rb == ib && h.eb == eb && h.vec == vec) found = true;
        if (h.rb == ia && h.eb == ea && h.ra == ib && h.ea == eb && h.vec == Vec2F{-vec.x, -vec.y})
          found = true;
      }
      if (!found) throw std::logic_error("Staircase: act_S does not respect the gluings");
    }
  }

  Vec2F edge_start(int r, int e) const { return rects_[r].corner(e); }
  Vec2F edge_end(int r, int e) const { return rects_[r].corner((e + 1) % 4); }

  bool on_edge(int r, int e, const Vec2F& p) const {
    Vec2F a = edge_start(r, e), b = edge_end(r, e);
    Vec2F ab = b - a, ap = p - a;
    if (!(cross(ab, ap)).is_zero()) return false;
    FieldElement t = dot(ab, ap);
    return sign(t) >= 0 && sign(dot(ab, ab) - t) >= 0;
  }

  static bool lex_less(const Vec2F& a, const Vec2F& b) {
    int c = sign(a.x - b.x);
    if (c != 0) return c < 0;
    return sign(a.y - b.y) < 0;
  }
};

inline Staircase build_staircase(const FieldContext& F) { return Staircase(F); }

/// Cylinder summary.
struct Cylinder {
  bool horizontal;
  FieldElement width, height;
  Staircase::Strip strip;
};

inline std::vector<Cylinder> cylinders(const Staircase& S, bool horizontal) {
  std::vector<Cylinder> out;
  for (const auto& s : (horizontal ? S.hstrips() : S.vstrips()))
    out.push_back({horizontal, s.width(), s.height(), s});
  return out;
}

}  // namespace dngon
