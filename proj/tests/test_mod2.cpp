#include "dngon/mod2.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace dngon;

TEST_CASE("reduction modulo two") {
  FieldContext F(7);
  Mod2Context M(F);
  FieldElement lam = FieldElement::lambda(F);

  CHECK(reduce_mod2(M, FieldElement(F, 0)).is_zero());
  // 1 + 2 lambda + 3 lambda^2 -> 1 + lambda^2
  FieldElement e = FieldElement(F, 1) + 2 * lam + 3 * (lam * lam);
  CHECK(reduce_mod2(M, e) == Gf2Poly::from_bits({1, 0, 1}));
  // lambda^3 = lambda^2 + 2 lambda - 1 -> lambda^2 + 1 (pbar = X^3 + X^2 + 1)
  CHECK(M.pbar == Gf2Poly::from_bits({1, 0, 1, 1}));
  CHECK(reduce_mod2(M, lam * lam * lam) == Gf2Poly::from_bits({1, 0, 1}));
  CHECK_THROWS_AS(reduce_mod2(M, lam * mpq_class(1, 3)), std::invalid_argument);
}

TEST_CASE("factorization of pbar") {
  {
    FieldContext F(7);
    Mod2Context M(F);
    REQUIRE(M.factors.size() == 1);
    CHECK(M.factors[0].f == Gf2Poly::from_bits({1, 0, 1, 1}));
    CHECK(M.factors[0].multiplicity == 1);
  }
  {
    FieldContext F(9);
    Mod2Context M(F);
    REQUIRE(M.factors.size() == 1);
    CHECK(M.factors[0].f == Gf2Poly::from_bits({1, 1, 0, 1}));  // X^3 + X + 1
    CHECK(M.factors[0].multiplicity == 1);
  }
  {
    FieldContext F(17);
    Mod2Context M(F);
    REQUIRE(M.factors.size() == 2);
    CHECK(M.factors[0].f != M.factors[1].f);
    CHECK(M.factors[0].f.degree() == 4);
    CHECK(M.factors[1].f.degree() == 4);
    CHECK(M.factors[0].multiplicity == 1);
    CHECK(M.factors[1].multiplicity == 1);
    // |P^1| = 17 * 17 = 289
    CHECK(M.p1_size() == 289);
  }
}

TEST_CASE("gf2 factorization handles multiplicities") {
  Gf2Poly f = Gf2Poly::from_bits({1, 1});      // X + 1
  Gf2Poly g = Gf2Poly::from_bits({1, 1, 1});   // X^2 + X + 1
  Gf2Poly prod = f * f * f * g * g;
  auto fac = gf2_factor(prod);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].f == f);
  CHECK(fac[0].multiplicity == 3);
  CHECK(fac[1].f == g);
  CHECK(fac[1].multiplicity == 2);
}

TEST_CASE("units and inverses in O/2O") {
  FieldContext F(7);
  Mod2Context M(F);
  Gf2Poly one = Gf2Poly::one(), zero;
  CHECK(M.is_unit(one));
  CHECK(M.inverse(one) == one);
  CHECK(!M.is_unit(zero));
  CHECK_THROWS_AS(M.inverse(zero), std::domain_error);
  Gf2Poly lam_bar = Gf2Poly::x();
  CHECK(M.is_unit(lam_bar));
  CHECK(M.mul(lam_bar, M.inverse(lam_bar)) == one);
}

TEST_CASE("projective class equality") {
  FieldContext F(7);
  Mod2Context M(F);
  Gf2Poly one = Gf2Poly::one(), zero, X = Gf2Poly::x();

  CHECK(ProjClass(M, one, zero) == ProjClass(M, one, zero));
  // [lambda^2+1 : 1] vs [1 : lambda^2+1]: distinct classes
  Gf2Poly l21 = Gf2Poly::from_bits({1, 0, 1});
  CHECK(ProjClass(M, l21, one) != ProjClass(M, one, l21));
  // [lambda : 1] = [lambda^3 : lambda^2] (scale by the unit lambda^2)
  CHECK(ProjClass(M, X, one) == ProjClass(M, X * X * X, X * X));
  CHECK_THROWS_AS(ProjClass(M, zero, zero), std::invalid_argument);
}

TEST_CASE("class equality is an equivalence relation on random unimodular pairs") {
  FieldContext F(15);
  Mod2Context M(F);
  std::mt19937_64 rng(7);
  auto random_poly = [&]() {
    Gf2Poly p;
    for (int k = 0; k < F.d; ++k)
      if (rng() & 1) p.set(k, true);
    return p;
  };
  std::vector<ProjClass> sample;
  while (sample.size() < 24) {
    Gf2Poly x = random_poly(), y = random_poly();
    if (x.is_zero() && y.is_zero()) continue;
    ProjClass c(M, x, y);
    if (c.unimodular()) sample.push_back(c);
  }
  for (const auto& a : sample) CHECK(a == a);
  for (const auto& a : sample)
    for (const auto& b : sample) CHECK((a == b) == (b == a));
  // transitivity on unit multiples
  Gf2Poly u = Gf2Poly::from_bits({1, 1, 0, 1});
  for (const auto& a : sample) {
    ProjClass b(M, M.mul(a.x(), u), M.mul(a.y(), u));
    if (M.is_unit(u)) CHECK(a == b);
  }
}

TEST_CASE("field case: exhaustive class enumeration matches p1_size") {
  FieldContext F(7);
  Mod2Context M(F);
  std::vector<ProjClass> classes;
  classes.emplace_back(M, Gf2Poly::one(), Gf2Poly());
  for (int bits = 0; bits < 8; ++bits) {
    Gf2Poly x;
    for (int k = 0; k < 3; ++k)
      if ((bits >> k) & 1) x.set(k, true);
    classes.emplace_back(M, x, Gf2Poly::one());
  }
  CHECK(mpz_class(classes.size()) == M.p1_size());
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j) CHECK(classes[i] != classes[j]);
}

TEST_CASE("psi examples and invariance") {
  FieldContext F(7);
  Mod2Context M(F);
  FieldElement lam = FieldElement::lambda(F);
  FieldElement one(F, 1), zero(F, 0);

  auto c1 = psi(M, one, zero);
  REQUIRE(c1);
  CHECK(*c1 == ProjClass(M, Gf2Poly::one(), Gf2Poly()));

  // halving: (2, 2 lambda) -> [1 : lambda]
  auto c2 = psi(M, FieldElement(F, 2), 2 * lam);
  REQUIRE(c2);
  CHECK(*c2 == ProjClass(M, Gf2Poly::one(), Gf2Poly::x()));

  // (-1 - lambda^2, -1 - 2 lambda) -> [lambda^2+1 : 1]
  auto c3 = psi(M, -one - lam * lam, -one - 2 * lam);
  REQUIRE(c3);
  CHECK(*c3 == ProjClass(M, Gf2Poly::from_bits({1, 0, 1}), Gf2Poly::one()));

  CHECK_THROWS_AS(psi(M, zero, zero), std::invalid_argument);

  // invariance under odd rational scalars (after clearing denominators)
  FieldElement x = FieldElement(F, 3) + lam, y = lam * lam - one;
  auto base = psi(M, x, y);
  REQUIRE(base);
  for (long u : {3L, 5L, 15L}) {
    auto scaled = psi(M, x * mpq_class(u), y * mpq_class(u));
    REQUIRE(scaled);
    CHECK(*scaled == *base);
  }
  // even scalars are absorbed by the halving loop
  auto doubled = psi(M, x * mpq_class(8), y * mpq_class(8));
  REQUIRE(doubled);
  CHECK(*doubled == *base);
}

TEST_CASE("non-unimodular residual pairs are inconclusive") {
  FieldContext F(17);
  Mod2Context M(F);
  REQUIRE(M.factors.size() == 2);
  // lift one factor to an integral element: shares that factor with pbar
  const Gf2Poly& f = M.factors[0].f;
  std::vector<mpq_class> cx(F.d);
  for (int k = 0; k <= f.degree(); ++k) cx[k] = f.get(k) ? 1 : 0;
  FieldElement x(F, cx);
  FieldElement y = x * FieldElement::lambda(F);
  auto c = psi(M, x, y);
  CHECK(!c);  // gcd(xbar, ybar, pbar) = f, not a unit
}
