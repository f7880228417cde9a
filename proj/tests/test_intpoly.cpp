#include "dngon/intpoly.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dngon;

namespace {
IntPoly ip(std::vector<long> c) {
  std::vector<mpz_class> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == ip({-1, 1}));
  CHECK(cyclotomic(2) == ip({1, 1}));
  CHECK(cyclotomic(14) == ip({1, -1, 1, -1, 1, -1, 1}));
  // oracle: divide x^18 - 1 by Phi_1 Phi_2 Phi_3 Phi_6 Phi_9
  IntPoly x18 = IntPoly::monomial(18) - IntPoly::constant(1);
  IntPoly q = x18;
  for (int d : {1, 2, 3, 6, 9}) q = q.exact_div(cyclotomic(d));
  CHECK(cyclotomic(18) == q);
  CHECK(cyclotomic(18) == ip({1, 0, 0, -1, 0, 0, 1}));

  // product over divisors reassembles x^m - 1
  for (int m : {12, 30}) {
    IntPoly prod = IntPoly::constant(1);
    for (int e = 1; e <= m; ++e)
      if (m % e == 0) prod = prod * cyclotomic(e);
    CHECK(prod == IntPoly::monomial(m) - IntPoly::constant(1));
  }
}

TEST_CASE("minimal polynomial of 2cos(pi/n)") {
  CHECK(min_poly(7) == ip({1, -2, -1, 1}));
  CHECK(min_poly(5) == ip({-1, -1, 1}));
  CHECK(min_poly(9) == ip({-1, -3, 0, 1}));  // triple-angle: lambda^3 - 3 lambda = 1
  CHECK(min_poly(3) == ip({-1, 1}));

  // the construction itself verifies t^d P(t + 1/t) = Phi_2n term by term,
  // so survival plus shape is the oracle here
  for (int n = 3; n <= 31; n += 2) {
    IntPoly p = min_poly(n);
    CHECK(p.is_monic());
    CHECK(p.degree() == euler_phi(2 * n) / 2);
  }
  CHECK_THROWS_AS(min_poly(8), std::invalid_argument);
}

TEST_CASE("prime coefficient pattern") {
  for (int p : {7, 11, 13, 17, 19, 23, 29, 31}) {
    INFO("p = " << p);
    CHECK(prime_coefficient_check(p));
  }
  CHECK(prime_coefficient_check(5));
  CHECK(prime_coefficient_check(3));
}

TEST_CASE("polynomial division is exact for monic divisors") {
  IntPoly a = ip({3, 0, -2, 7, 1}) * ip({-5, 1, 1}) + ip({1, 2});
  IntPoly q, r;
  IntPoly::divmod(a, ip({-5, 1, 1}), q, r);
  CHECK(q == ip({3, 0, -2, 7, 1}));
  CHECK(r == ip({1, 2}));
  CHECK_THROWS_AS(a.exact_div(ip({-5, 1, 1})), std::logic_error);
}
