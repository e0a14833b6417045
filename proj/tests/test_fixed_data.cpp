#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hamfix/fixed_data.hpp"
#include "hamfix/json_io.hpp"
#include "hamfix/models.hpp"

using namespace hamfix;

namespace {
GradedPoly U() { return poly_u(); }
GradedPoly T() { return poly_t(); }
GradedPoly one() { return poly_const(1); }

GradedPoly at_t0(const GradedPoly& p) {
  return substitute(p, "t", GradedPoly(env_ut()));
}
}  // namespace

TEST_CASE("morse index") {
  FixedPointData cpn41 = fixture_cpn(4, 1);
  CHECK(morse_index(cpn41.components[0]) == 0);
  CHECK(morse_index(cpn41.components[1]) == 3);
  FixedPointData q3 = fixture_quadric(3);
  CHECK(morse_index(q3.components[1]) == 2);
}

TEST_CASE("gamma and weight products") {
  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j <= n - 1; ++j) {
      FixedPointData d = fixture_cpn(n, j);
      int i = n - j - 1;
      CHECK(gamma(d.components[0]) == j + 1);
      CHECK(lambda_minus(d.components[0]) == 1);
      CHECK(gamma(d.components[1]) == -(i + 1));
      CHECK(lambda_minus(d.components[1]) == int_pow(Integer(-1), i + 1));
    }
  for (int n : {3, 5, 7}) {
    FixedPointData d = fixture_quadric(n);
    int i = (n - 1) / 2;
    CHECK(lambda_minus(d.components[1]) ==
          int_pow(Integer(2), i) * int_pow(Integer(-1), i + 1));
    CHECK(gamma(d.components[0]) == 1 + 2 * i);
  }
}

TEST_CASE("equivariant chern of a summand") {
  WeightSummand v{1, 2, pow(one() + U(), 2)};
  CHECK(equivariant_chern_summand(v) == pow(one() + U() + T(), 2));

  WeightSummand w{2, 1, one() + U()};
  CHECK(equivariant_chern_summand(w) == one() + Rational(2) * T() + U());

  WeightSummand r{5, 1, one()};
  CHECK(equivariant_chern_summand(r) == one() + Rational(5) * T());
}

TEST_CASE("equivariant euler classes") {
  WeightSummand v{1, 2, pow(one() + U(), 2)};
  CHECK(equivariant_euler_summand(v) == pow(T() + U(), 2));

  FixedPointData q3 = fixture_quadric(3);
  CHECK(equivariant_euler(q3.components[0]) ==
        Rational(2) * pow(T(), 2) + Rational(2) * U() * T());
  // empty product at the minimum
  CHECK(equivariant_euler_negative(q3.components[0]) == one());
}

TEST_CASE("chern at t = 0 recovers the input, euler factorizes") {
  std::vector<FixedPointData> all = {fixture_cpn(4, 1), fixture_cpn(6, 2),
                                     fixture_quadric(5),
                                     fixture_three_component_quadric3()};
  for (const auto& d : all)
    for (const auto& f : d.components) {
      for (const auto& v : f.summands) {
        CHECK(at_t0(equivariant_chern_summand(v)) == v.chern);
        CHECK(equivariant_euler_summand(v).coefficient({0, v.rank}) ==
              Rational(int_pow(Integer(v.weight), v.rank)));
      }
      GradedPoly pos = one();
      for (const auto& v : f.summands)
        if (v.weight > 0) pos = pos * equivariant_euler_summand(v);
      CHECK(equivariant_euler(f) ==
            truncate(equivariant_euler_negative(f) * pos, "u", f.u_top()));
      // leading pure-t coefficients
      int codim_half = (d.dim_m - f.dim) / 2;
      CHECK(equivariant_euler(f).coefficient({0, codim_half}) ==
            Rational(lambda_total(f)));
      CHECK(equivariant_euler_negative(f).coefficient(
                {0, morse_index(f)}) == Rational(lambda_minus(f)));
    }
}

TEST_CASE("binomial substitution identity for summand chern") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> rr(1, 5), ww(-4, 4);
  for (int iter = 0; iter < 50; ++iter) {
    int r = rr(rng);
    int w = ww(rng);
    if (w == 0) continue;
    WeightSummand v{w, r, pow(one() + U(), static_cast<unsigned>(r))};
    CHECK(equivariant_chern_summand(v) ==
          pow(one() + U() + Rational(w) * T(), static_cast<unsigned>(r)));
  }
}

TEST_CASE("u_tilde restrictions") {
  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j <= n - 1; ++j) {
      EquivariantClass ut = u_tilde(fixture_cpn(n, j), 0);
      FixedPointData d = fixture_cpn(n, j);
      CHECK(ut.restrictions[0] ==
            truncate(U(), "u", d.components[0].u_top()));
      CHECK(ut.restrictions[1] ==
            truncate(U() - T(), "u", d.components[1].u_top()));
    }
  for (int n : {3, 5, 7}) {
    EquivariantClass ut = u_tilde(fixture_quadric(n), 0);
    CHECK(ut.restrictions[1] == U() - Rational(2) * T());
  }
  // base = F' gives a bare generator
  EquivariantClass base1 = u_tilde(fixture_quadric(3), 1);
  CHECK(base1.restrictions[1] == U());
}

TEST_CASE("restriction tuples know their common degree") {
  FixedPointData d = fixture_quadric(5);
  CHECK(ec_degree(u_tilde(d, 0)) == 2);
  CHECK(ec_degree(ec_pow(u_tilde(d, 0), 3, d)) == 6);
  CHECK_FALSE(ec_degree(ec_add(u_tilde(d, 0), ec_constant(d, 1))).has_value());
  CHECK_FALSE(ec_degree(ec_constant(d, 0)).has_value());
}

TEST_CASE("validate positive fixtures") {
  for (int n = 1; n <= 8; ++n)
    for (int j = 0; j <= n - 1; ++j) {
      ValidationReport rep = validate(fixture_cpn(n, j));
      INFO("cpn(" << n << "," << j << ")");
      CHECK(rep.all_passed());
    }
  for (int n : {3, 5, 7}) CHECK(validate(fixture_quadric(n)).all_passed());
  CHECK(validate(fixture_three_component_quadric3()).all_passed());
}

TEST_CASE("validate flags designed violations") {
  // weight mutated from 1 to 3: effectiveness still passes
  FixedPointData d = fixture_cpn(4, 1);
  d.components[0].summands[0].weight = 3;
  ValidationReport rep = validate(d);
  const CheckResult* eff = rep.find("effectiveness");
  REQUIRE(eff);
  CHECK(eff->passed);
  CHECK_FALSE(rep.has_fatal());

  // equal moment values are fatal
  FixedPointData e = fixture_cpn(4, 1);
  e.components[1].moment = 0;
  ValidationReport rep2 = validate(e);
  CHECK(rep2.has_fatal());
  const CheckResult* ord = rep2.find("moment-ordering");
  REQUIRE(ord);
  CHECK_FALSE(ord->passed);

  // rank-sum violation is fatal
  FixedPointData r = fixture_quadric(3);
  r.components[0].summands[1].rank = 2;
  CHECK(validate(r).has_fatal());
  CHECK_FALSE(validate(r).find("rank-sum")->passed);
}

TEST_CASE("json round trip") {
  std::vector<FixedPointData> all = {fixture_cpn(1, 0), fixture_cpn(5, 2),
                                     fixture_quadric(5),
                                     fixture_three_component_quadric3()};
  for (const auto& d : all) CHECK(from_json(to_json(d)) == d);
}

TEST_CASE("json rejects malformed moments") {
  nlohmann::json j = to_json(fixture_cpn(2, 0));
  j["components"][0]["moment"] = "0.5.1";
  CHECK_THROWS_AS(from_json(j), ParseError);
  j["components"][0]["moment"] = "1/0";
  CHECK_THROWS_AS(from_json(j), ParseError);
  j["components"][0]["moment"] = 3;  // number, not string
  CHECK_THROWS_AS(from_json(j), ParseError);
}

TEST_CASE("json loader sorts components by moment") {
  nlohmann::json j = to_json(fixture_cpn(3, 1));
  std::swap(j["components"][0], j["components"][1]);
  CHECK(from_json(j) == fixture_cpn(3, 1));
}
