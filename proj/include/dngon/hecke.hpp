#pragma once

#include "dngon/mat2.hpp"

#include <algorithm>
#include <set>

namespace dngon {

/// P_0 = 0, P_1 = 1, P_{i+1}(X) = X P_i(X) + P_{i-1}(X).
inline IntPoly p_polys(int i) {
  if (i < 0) throw std::invalid_argument("p_polys: negative index");
  IntPoly p0 = IntPoly::zero(), p1 = IntPoly::constant(1);
  if (i == 0) return p0;
  for (int k = 1; k < i; ++k) {
    IntPoly p2 = IntPoly::x() * p1 + p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Monic of degree i-1, coefficients only in degrees of parity i-1, and
/// (for i >= 3) coefficient i-2 at degree i-3.
inline bool p_properties_check(int i) {
  if (i < 1) return false;
  IntPoly p = p_polys(i);
  if (p.degree() != i - 1 || !p.is_monic()) return false;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0 && (k % 2) != ((i - 1) % 2)) return false;
  if (i >= 3 && p.coeff(i - 3) != i - 2) return false;
  return true;
}

/// U^k against the sine-quotient matrix (S_{k+1}, -S_k; S_k, -S_{k-1});
/// exact equality up to a global sign.
inline bool u_power_formula_check(const FieldContext& F, int k) {
  Mat2 uk = gens(F).U.pow(k);
  Mat2 want{cheb_s(F, k + 1), -cheb_s(F, k), cheb_s(F, k), -cheb_s(F, k - 1)};
  return uk == want || uk == -want;
}

/// The reduced orbit of [1:0] under the mod-2 Hecke group.
struct OrbitSet {
  std::vector<ProjClass> classes;      // deduplicated, in discovery order
  std::vector<int> generation;         // BFS depth at which each class appeared

  bool contains(const ProjClass& c) const {
    if (!c.unimodular()) throw std::domain_error("orbit_contains: non-unimodular class");
    return std::any_of(classes.begin(), classes.end(), [&](const ProjClass& o) { return o == c; });
  }
  size_t size() const { return classes.size(); }
};

/// Closure of [1:0] under both reduced generators, cross-checked against the
/// explicit P_i description {[P_{i+1}(lambda) : P_i(lambda)], 0 <= i <= n-1}.
inline OrbitSet orbit_mod2(const Mod2Context& M) {
  const FieldContext& F = *M.field;
  HeckeGens G = gens(F);
  Gf2Mat2 Tb = reduce_mod2(M, G.T), Sb = reduce_mod2(M, G.S), Ub = reduce_mod2(M, G.U);

  OrbitSet orbit;
  std::set<ProjClass> seen;
  std::vector<std::pair<Gf2Poly, Gf2Poly>> frontier{{Gf2Poly::one(), Gf2Poly()}};
  std::vector<std::pair<Gf2Poly, Gf2Poly>> reps;
  orbit.classes.emplace_back(M, frontier[0].first, frontier[0].second);
  orbit.generation.push_back(0);
  seen.insert(orbit.classes[0]);
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<std::pair<Gf2Poly, Gf2Poly>> next;
    for (const auto& [x, y] : frontier) {
      for (const Gf2Mat2* g : {&Tb, &Sb, &Ub}) {
        auto [nx, ny] = g->apply(x, y);
        ProjClass c(M, nx, ny);
        if (seen.insert(c).second) {
          orbit.classes.push_back(c);
          orbit.generation.push_back(depth);
          next.emplace_back(nx, ny);
        }
      }
    }
    frontier = std::move(next);
  }

  // explicit description from the recurrence polynomials
  std::set<ProjClass> formula;
  for (int i = 0; i <= F.n - 1; ++i) {
    Gf2Poly pi, pi1;
    {
      IntPoly a = p_polys(i), b = p_polys(i + 1);
      Gf2Poly ra, rb;
      for (int k = 0; k <= a.degree(); ++k)
        if (mpz_odd_p(a.coeff(k).get_mpz_t())) ra.set(k, true);
      for (int k = 0; k <= b.degree(); ++k)
        if (mpz_odd_p(b.coeff(k).get_mpz_t())) rb.set(k, true);
      pi = M.reduce(ra);
      pi1 = M.reduce(rb);
    }
    formula.emplace(M, pi1, pi);
  }
  if (formula != seen) throw std::logic_error("orbit_mod2: closure disagrees with the P_i description");
  return orbit;
}

/// P_{n-i}(lambda) = P_i(lambda) mod (2, pbar) for 0 <= i <= n.
inline bool symmetry_check(const Mod2Context& M) {
  const int n = M.field->n;
  auto evalp = [&](int i) {
    IntPoly p = p_polys(i);
    Gf2Poly r;
    for (int k = 0; k <= p.degree(); ++k)
      if (mpz_odd_p(p.coeff(k).get_mpz_t())) r.set(k, true);
    return M.reduce(r);
  };
  for (int i = 0; i <= n; ++i)
    if (evalp(n - i) != evalp(i)) return false;
  return true;
}

inline bool orbit_contains(const OrbitSet& orbit, const ProjClass& c) { return orbit.contains(c); }

inline bool strict_inclusion(const Mod2Context& M, const OrbitSet& orbit) {
  return mpz_class(orbit.size()) < M.p1_size();
}

/// The obstruction class [lambda^2 + 1 : 1].
inline ProjClass lambda2_class(const Mod2Context& M) {
  Gf2Poly x = M.reduce(Gf2Poly::from_bits({1, 0, 1}));
  return ProjClass(M, x, Gf2Poly::one());
}

inline bool prime_obstruction_check(int p) {
  FieldContext F(p);
  Mod2Context M(F);
  OrbitSet orbit = orbit_mod2(M);
  return !orbit.contains(lambda2_class(M));
}

// ---------------------------------------------------------------------------
// Reduction modulo an odd prime p: small-case enumeration of P^1(O/pO).

namespace modp {

using Poly = std::vector<int>;  // coefficients mod p, index = degree, trimmed

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline Poly add(const Poly& a, const Poly& b, int p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    int v = 0;
    if (i < a.size()) v += a[i];
    if (i < b.size()) v += b[i];
    r[i] = v % p;
  }
  trim(r);
  return r;
}
inline Poly mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}
inline Poly mod(Poly a, const Poly& m, int p) {
  // m monic
  int dm = static_cast<int>(m.size()) - 1;
  int inv_lead = 1;  // monic
  (void)inv_lead;
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    int k = static_cast<int>(a.size()) - 1 - dm;
    int f = a.back();
    for (int i = 0; i <= dm; ++i) a[k + i] = ((a[k + i] - f * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}
inline Poly gcd(Poly a, Poly b, int p) {
  auto modp_full = [&](Poly x, Poly y) {  // x mod y, y not necessarily monic
    int dy = static_cast<int>(y.size()) - 1;
    // make y monic by scaling
    int lead = y.back();
    int inv = 1;
    for (int t = 1; t < p; ++t)
      if (lead * t % p == 1) inv = t;
    Poly ym(y.size());
    for (size_t i = 0; i < y.size(); ++i) ym[i] = y[i] * inv % p;
    (void)dy;
    return mod(std::move(x), ym, p);
  };
  while (!b.empty()) {
    Poly r = modp_full(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace modp

struct OrbitModPResult {
  long orbit_size;
  long p1_size;
};

/// Orbit of [1:0] in P^1(O/pO) for a small odd prime p, by explicit
/// enumeration with canonicalization over the unit group. Refused when
/// p^(2d) exceeds the budget.
inline OrbitModPResult orbit_mod_p(const FieldContext& F, int p, double budget = double(1 << 24)) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("orbit_mod_p: p must be an odd prime");
  const int d = F.d;
  double states = 1;
  for (int i = 0; i < 2 * d; ++i) states *= p;
  if (states > budget) throw std::invalid_argument("orbit_mod_p: p^(2d) exceeds the enumeration budget");

  modp::Poly pmod(d + 1);
  for (int k = 0; k <= d; ++k) {
    mpz_class r = ((F.minimal.coeff(k) % p) + p) % p;
    pmod[k] = static_cast<int>(r.get_si());
  }
  // enumerate ring elements as mixed-radix vectors
  long q = 1;
  for (int i = 0; i < d; ++i) q *= p;
  auto decode = [&](long idx) {
    modp::Poly r(d);
    for (int i = 0; i < d; ++i) {
      r[i] = idx % p;
      idx /= p;
    }
    modp::trim(r);
    return r;
  };
  auto encode = [&](const modp::Poly& a) {
    long idx = 0;
    for (int i = d - 1; i >= 0; --i) idx = idx * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    return idx;
  };

  std::vector<long> units;
  for (long i = 1; i < q; ++i) {
    modp::Poly a = decode(i);
    modp::Poly g = modp::gcd(pmod, a, p);
    if (g.size() == 1) units.push_back(i);
  }

  auto canon = [&](modp::Poly x, modp::Poly y) -> std::pair<long, long> {
    std::pair<long, long> best{-1, -1};
    for (long u : units) {
      modp::Poly pu = decode(u);
      long cx = encode(modp::mod(modp::mul(pu, x, p), pmod, p));
      long cy = encode(modp::mod(modp::mul(pu, y, p), pmod, p));
      std::pair<long, long> cand{cx, cy};
      if (best.first < 0 || cand < best) best = cand;
    }
    return best;
  };
  auto unimodular = [&](const modp::Poly& x, const modp::Poly& y) {
    modp::Poly g = modp::gcd(pmod, modp::gcd(x, y, p), p);
    return g.size() == 1;
  };

  // full projective line
  std::set<std::pair<long, long>> all;
  for (long ix = 0; ix < q; ++ix)
    for (long iy = 0; iy < q; ++iy) {
      if (ix == 0 && iy == 0) continue;
      modp::Poly x = decode(ix), y = decode(iy);
      if (!unimodular(x, y)) continue;
      all.insert(canon(x, y));
    }

  // orbit closure under T and S mod p
  modp::Poly lam;
  if (d > 1) {
    lam = {0, 1};  // lambda = X
  } else {
    mpz_class r = (((-F.minimal.coeff(0)) % p) + p) % p;
    lam = {static_cast<int>(r.get_si())};
    modp::trim(lam);
  }
  auto actT = [&](modp::Poly x, const modp::Poly& y) {
    return std::make_pair(modp::mod(modp::add(x, modp::mul(lam, y, p), p), pmod, p), y);
  };
  auto actS = [&](const modp::Poly& x, modp::Poly y) {
    for (auto& v : y) v = (p - v) % p;
    modp::trim(y);
    return std::make_pair(y, x);  // (x, y) -> (-y, x)
  };

  std::set<std::pair<long, long>> orbit;
  std::vector<std::pair<modp::Poly, modp::Poly>> frontier{{modp::Poly{1}, modp::Poly{}}};
  orbit.insert(canon(frontier[0].first, frontier[0].second));
  while (!frontier.empty()) {
    std::vector<std::pair<modp::Poly, modp::Poly>> next;
    for (auto& [x, y] : frontier) {
      for (int g = 0; g < 2; ++g) {
        auto [nx, ny] = g == 0 ? actT(x, y) : actS(x, y);
        if (orbit.insert(canon(nx, ny)).second) next.emplace_back(nx, ny);
      }
    }
    frontier = std::move(next);
  }

  return {static_cast<long>(orbit.size()), static_cast<long>(all.size())};
}

}  // namespace dngon
