#pragma once

#include "dngon/hecke.hpp"
#include "dngon/staircase.hpp"
#include "dngon/tracer.hpp"

#include <deque>
#include <map>

namespace dngon {

enum class Verdict { NotPeriodic, MembershipInconclusive, NoObstruction };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotPeriodic: return "NotPeriodic";
    case Verdict::MembershipInconclusive: return "MembershipInconclusive";
    default: return "NoObstruction";
  }
}

/// Field, mod-2 ring and cusp orbit for one n, built once and shared.
struct AnalysisContext {
  FieldContext field;
  Mod2Context mod2;
  OrbitSet orbit;
  explicit AnalysisContext(int n) : field(n), mod2(field), orbit(orbit_mod2(mod2)) {}
  AnalysisContext(const AnalysisContext&) = delete;
  AnalysisContext& operator=(const AnalysisContext&) = delete;
};

/// Machine-checkable outcome of the mod-2 obstruction chain for one direction.
/// NotPeriodic is only emitted for a unimodular class outside the orbit.
struct Certificate {
  int n;
  Vec2F direction;                // integral representative fed to psi
  std::optional<ProjClass> cls;   // nullopt when psi was inconclusive
  mpz_class orbit_size;
  mpz_class p1_size;
  Verdict verdict;
};

/// Scale a Q(lambda) direction to an integral pair (by the lcm of coefficient
/// denominators), push it through psi, and test orbit membership.
inline Certificate certify_direction(const AnalysisContext& A, Vec2F dir) {
  if (dir.x.is_zero() && dir.y.is_zero())
    throw std::invalid_argument("certify_direction: zero direction");
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), dir.x.denominator().get_mpz_t(), dir.y.denominator().get_mpz_t());
  Vec2F scaled{dir.x * mpq_class(l), dir.y * mpq_class(l)};
  Certificate cert;
  cert.n = A.field.n;
  cert.direction = scaled;
  cert.orbit_size = static_cast<long>(A.orbit.size());
  cert.p1_size = A.mod2.p1_size();
  std::optional<ProjClass> cls = psi(A.mod2, scaled.x, scaled.y);
  cert.cls = cls;
  if (!cls) {
    cert.verdict = Verdict::MembershipInconclusive;
  } else if (!A.orbit.contains(*cls)) {
    cert.verdict = Verdict::NotPeriodic;
  } else {
    cert.verdict = Verdict::NoObstruction;
  }
  return cert;
}

/// Re-run the chain from the stored direction; must reproduce the verdict.
inline bool replay(const Certificate& cert) {
  AnalysisContext A(cert.n);
  Certificate again = certify_direction(A, cert.direction);
  if (again.verdict != cert.verdict) return false;
  if (again.orbit_size != cert.orbit_size || again.p1_size != cert.p1_size) return false;
  if (cert.cls.has_value() != again.cls.has_value()) return false;
  if (cert.cls && !(*cert.cls == *again.cls)) return false;
  return true;
}

struct SurveyRow {
  int n;
  long orbit_size;
  mpz_class p1_size;
  Verdict verdict;
};

/// For each odd n in the range, transport the central-point separatrix
/// direction to the staircase, apply TST^{-1}, and certify it.
inline std::vector<SurveyRow> survey(int n_min, int n_max) {
  if (n_min % 2 == 0 || n_max % 2 == 0) throw std::invalid_argument("survey: bounds must be odd");
  std::vector<SurveyRow> rows;
  for (int n = std::max(7, n_min); n <= n_max; n += 2) {
    AnalysisContext A(n);
    TheoremDirection dir = theorem_direction(A.field);
    Vec2F transported = tst_transport(A.field, dir.staircase);
    Certificate cert = certify_direction(A, transported);
    rows.push_back({n, static_cast<long>(A.orbit.size()), cert.p1_size, cert.verdict});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Constructive witness search over the twist moves.

enum class Move : int { TwistPlus2 = 0, TwistMinus2 = 1, RotS = 2, SwapR = 3 };

inline const char* to_string(Move m) {
  switch (m) {
    case Move::TwistPlus2: return "T^2";
    case Move::TwistMinus2: return "T^-2";
    case Move::RotS: return "S";
    default: return "R";
  }
}

inline Vec2F apply_move(const Staircase& S, const Vec2F& p, Move m) {
  switch (m) {
    case Move::TwistPlus2: return S.act_T(p, 2);
    case Move::TwistMinus2: return S.act_T(p, -2);
    case Move::RotS: return S.act_S(p);
    default: return S.act_R(p);
  }
}

struct SearchBudget {
  int max_depth = 40;
  size_t max_states = 50000;
};

/// Replayable path from P0 to a point Q of its affine orbit.
struct WitnessPath {
  Vec2F start;                 // P0, coordinates in (1/N) Z[lambda]^2
  mpz_class denominator;       // N, odd
  std::vector<Move> moves;
  Vec2F witness;               // Q, inside R_{(n-1)/2}
  Gf2Poly u_bar, v_bar;        // reduction of N*Q
};

inline bool replay(const Staircase& S, const WitnessPath& w) {
  Vec2F p = S.canonical(w.start);
  for (Move m : w.moves) p = apply_move(S, p, m);
  return p == w.witness;
}

namespace detail {

inline std::string point_key(const Vec2F& p) {
  std::string k;
  for (const mpq_class& q : p.x.coeffs()) k += q.get_str() + ",";
  k += ";";
  for (const mpq_class& q : p.y.coeffs()) k += q.get_str() + ",";
  return k;
}

struct BfsNode {
  Vec2F p;
  int parent;
  Move via;
  int depth;
};

// checks shared by find_witness and reachable_reductions
struct OrbitBfs {
  const Staircase& S;
  const AnalysisContext& A;
  mpz_class N;
  std::vector<BfsNode> nodes;
  std::map<std::string, int> seen;

  OrbitBfs(const Staircase& s, const AnalysisContext& a, const Vec2F& p0) : S(s), A(a) {
    mpz_lcm(N.get_mpz_t(), p0.x.denominator().get_mpz_t(), p0.y.denominator().get_mpz_t());
    if (mpz_even_p(N.get_mpz_t()))
      throw std::invalid_argument("witness search: the denominator N must be odd");
    Vec2F c = S.canonical(p0);
    nodes.push_back({c, -1, Move::TwistPlus2, 0});
    seen[point_key(c)] = 0;
  }

  std::pair<Gf2Poly, Gf2Poly> reduction(const Vec2F& p) const {
    FieldElement u = p.x * mpq_class(N), v = p.y * mpq_class(N);
    return {reduce_mod2(A.mod2, u), reduce_mod2(A.mod2, v)};
  }

  // expands breadth-first; stop(node_index) can end the search early
  template <class StopFn>
  int run(const SearchBudget& budget, StopFn&& stop) {
    if (stop(0)) return 0;
    size_t head = 0;
    while (head < nodes.size() && nodes.size() < budget.max_states) {
      BfsNode cur = nodes[head];
      if (cur.depth >= budget.max_depth) break;
      for (Move m : {Move::TwistPlus2, Move::TwistMinus2, Move::RotS, Move::SwapR}) {
        Vec2F q = apply_move(S, cur.p, m);
        std::string key = point_key(q);
        auto [it, fresh] = seen.emplace(key, static_cast<int>(nodes.size()));
        if (!fresh) continue;
        nodes.push_back({q, static_cast<int>(head), m, cur.depth + 1});
        if (stop(static_cast<int>(nodes.size()) - 1)) return static_cast<int>(nodes.size()) - 1;
        if (nodes.size() >= budget.max_states) break;
      }
      ++head;
    }
    return -1;
  }

  std::vector<Move> path_to(int idx) const {
    std::vector<Move> moves;
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) moves.push_back(nodes[i].via);
    std::reverse(moves.begin(), moves.end());
    return moves;
  }
};

}  // namespace detail

struct WitnessResult {
  WitnessPath path;
  Certificate certificate;
  size_t states_explored;
};

/// Breadth-first search over {T^2, T^-2, S, R} from P0 for an orbit point Q in
/// the central unit square whose mod-2 pair lies outside the preimage of the
/// cusp orbit; the separatrix (0,0) -> Q then carries a NotPeriodic
/// certificate, and the straight segment is verified by an exact trace.
inline WitnessResult find_witness(const AnalysisContext& A, const Staircase& S, const Vec2F& p0,
                                  SearchBudget budget = {}) {
  if (A.field.n == 9)
    throw std::invalid_argument("find_witness: n = 9 has no mod-2 obstruction (the orbit is all of P^1)");
  const FieldContext& F = A.field;
  Vec2F origin{FieldElement(F, 0), FieldElement(F, 0)};
  const Staircase::Rect& Rm = S.rect(S.m());

  detail::OrbitBfs bfs(S, A, p0);

  auto is_target = [&](int idx) {
    const Vec2F& p = bfs.nodes[idx].p;
    if (sign(p.x - Rm.x0) < 0 || sign(Rm.x1 - p.x) < 0) return false;
    if (sign(p.y - Rm.y0) < 0 || sign(Rm.y1 - p.y) < 0) return false;
    if (p.x.is_zero() && p.y.is_zero()) return false;
    auto [u, v] = bfs.reduction(p);
    if (u.is_zero() && v.is_zero()) return false;
    ProjClass cls(A.mod2, u, v);
    return cls.unimodular() && !A.orbit.contains(cls);
  };

  int found = bfs.run(budget, is_target);
  if (found < 0)
    throw std::runtime_error("find_witness: budget exhausted without a witness (not a disproof)");

  const Vec2F& Q = bfs.nodes[found].p;
  auto [u, v] = bfs.reduction(Q);
  WitnessPath path{bfs.nodes[0].p, bfs.N, bfs.path_to(found), Q, u, v};

  Vec2F dir{Q.x * mpq_class(bfs.N), Q.y * mpq_class(bfs.N)};
  Certificate cert = certify_direction(A, dir);
  if (cert.verdict != Verdict::NotPeriodic)
    throw std::logic_error("find_witness: certificate does not confirm the target class");

  // the straight separatrix from the singularity through Q, verified exactly
  FlatSurface flat = S.to_flat();
  flat.marked.push_back({S.m() - 1, to_quad(Q), "witness"});
  TraceOptions opt;
  opt.stop_at_marked = true;
  TraceResult tr = trace(flat, S.m() - 1, to_quad(origin), to_quad(dir), 64, opt);
  if (tr.termination != TraceTermination::MarkedHit)
    throw std::logic_error("find_witness: straight segment does not realize the separatrix");

  return {std::move(path), std::move(cert), bfs.nodes.size()};
}

/// All mod-2 pairs of N * (orbit points) reached within the budget.
inline std::set<std::pair<Gf2Poly, Gf2Poly>> reachable_reductions(const AnalysisContext& A,
                                                                  const Staircase& S,
                                                                  const Vec2F& p0,
                                                                  SearchBudget budget = {}) {
  detail::OrbitBfs bfs(S, A, p0);
  std::set<std::pair<Gf2Poly, Gf2Poly>> reached;
  // 4^d pairs in total; stop early once every one is reached
  size_t all = (2 * A.field.d < 62) ? (size_t(1) << (2 * A.field.d)) : SIZE_MAX;
  bfs.run(budget, [&](int idx) {
    reached.insert(bfs.reduction(bfs.nodes[idx].p));
    return reached.size() >= all;
  });
  return reached;
}

}  // namespace dngon
