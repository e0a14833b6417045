#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hamfix/laurent.hpp"
#include "test_util.hpp"

using namespace hamfix;
using testutil::random_poly;

namespace {
const Env UV = make_env({{"u", 2}, {"t", 2}});
GradedPoly U() { return GradedPoly::var(UV, "u"); }
GradedPoly T() { return GradedPoly::var(UV, "t"); }

LaurentPoly lp(const GradedPoly& p) { return LaurentPoly(p, "t"); }

LaurentPoly one_laurent() {
  LaurentPoly r(UV, "t");
  r.add_term({0, 0}, 1);
  return r;
}
}  // namespace

TEST_CASE("invert a bare t") {
  LaurentPoly inv = laurent_invert(lp(T()), {});
  LaurentPoly expect(UV, "t");
  expect.add_term({0, -1}, 1);
  CHECK(inv == expect);
}

TEST_CASE("invert t^2 + 2ut modulo u^2") {
  LaurentPoly inv =
      laurent_invert(lp(pow(T(), 2) + Rational(2) * U() * T()), {{"u", 1}});
  LaurentPoly expect(UV, "t");
  expect.add_term({0, -2}, 1);
  expect.add_term({1, -3}, -2);
  CHECK(inv == expect);
  // multiply back: (t^2+2ut)(t^-2 - 2u t^-3) = 1 - 4u^2 t^-2 == 1 mod u^2
  LaurentPoly prod =
      (lp(pow(T(), 2) + Rational(2) * U() * T()) * inv).truncated("u", 1);
  CHECK(prod == one_laurent());
}

TEST_CASE("invert -t + v modulo v^2") {
  const Env VT = make_env({{"v", 2}, {"t", 2}});
  GradedPoly v = GradedPoly::var(VT, "v");
  GradedPoly t = GradedPoly::var(VT, "t");
  LaurentPoly inv = laurent_invert(LaurentPoly(t * Rational(-1) + v, "t"),
                                   {{"v", 1}});
  LaurentPoly expect(VT, "t");
  expect.add_term({0, -1}, -1);
  expect.add_term({1, -2}, -1);
  CHECK(inv == expect);
}

TEST_CASE("invert error cases") {
  // no pure-t term at all
  CHECK_THROWS_AS(laurent_invert(lp(U()), {{"u", 3}}), SingularEulerError);
  // correction involving only non-nilpotent variables
  CHECK_THROWS_AS(laurent_invert(lp(T() + U()), {}), DivergentExpansionError);
}

TEST_CASE("invert round trip on random nilpotent corrections") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dpow(0, 4);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int iter = 0; iter < 300; ++iter) {
    int d = dpow(rng);
    long c0 = 0;
    while (c0 == 0) c0 = coeff(rng);
    // p = c0 t^d (1 + nu), nu supported on u with u^4 = 0
    GradedPoly nu = random_poly(rng, UV, 4, 3, 9);
    nu = nu - GradedPoly::constant(UV, nu.constant_term());
    nu = truncate(nu, "u", 3) -
         truncate(truncate(nu, "u", 3), "u", 0);  // keep only u-carrying terms
    GradedPoly p = (GradedPoly::constant(UV, Rational(c0)) *
                    (GradedPoly::constant(UV, 1) + nu)) *
                   pow(T(), static_cast<unsigned>(d));
    LaurentPoly inv = laurent_invert(lp(p), {{"u", 3}});
    CHECK((lp(p) * inv).truncated("u", 3) == one_laurent());
  }
}
