#include <catch2/catch_amalgamated.hpp>

#include "hamfix/classify.hpp"
#include "hamfix/json_io.hpp"
#include "hamfix/models.hpp"

using namespace hamfix;

namespace {
GradedPoly U() { return poly_u(); }
GradedPoly one() { return poly_const(1); }
}  // namespace

TEST_CASE("cpn fixture data") {
  {
    FixedPointData d = fixture_cpn(1, 0);
    CHECK(d.dim_m == 2);
    CHECK(d.components[0].dim == 0);
    CHECK(d.components[1].dim == 0);
    CHECK(d.components[0].summands[0].weight == 1);
    CHECK(d.components[1].summands[0].weight == -1);
    CHECK(d.components[0].moment == 0);
    CHECK(d.components[1].moment == 1);
  }
  {
    FixedPointData d = fixture_cpn(4, 1);
    CHECK(d.components[0].dim == 4);  // CP^2
    CHECK(d.components[1].dim == 2);  // CP^1
    CHECK(d.components[0].summands[0].rank == 2);
    CHECK(d.components[1].summands[0].rank == 3);
    CHECK(d.components[0].dim + d.components[1].dim == d.dim_m - 2);
  }
  {
    FixedPointData d = fixture_cpn(2, 1);
    CHECK(d.components[0].dim == 0);
    CHECK(d.components[1].dim == 2);
  }
  CHECK_THROWS_AS(fixture_cpn(0, 0), NotApplicableError);
  CHECK_THROWS_AS(fixture_cpn(3, 3), NotApplicableError);
}

TEST_CASE("quadric fixture data") {
  {
    FixedPointData d = fixture_quadric(3);
    CHECK(d.components[0].dim == 2);
    CHECK(d.components[1].dim == 2);
    CHECK(d.components[0].summands[0].chern == one() + U());
    CHECK(d.components[0].summands[1].chern == one());
    CHECK(d.components[1].summands[0].chern == one() + U());
    CHECK(d.components[1].summands[1].chern == one());
    CHECK(d.components[1].moment - d.components[0].moment == 2);
  }
  {
    // series quotient (1+u)^3/(1+2u) mod u^3 = 1 + u + u^2, checked by
    // re-multiplication
    FixedPointData d = fixture_quadric(5);
    GradedPoly c2 = d.components[0].summands[1].chern;
    CHECK(c2 == one() + U() + pow(U(), 2));
    CHECK(truncate(c2 * (one() + Rational(2) * U()), "u", 2) ==
          truncate(pow(one() + U(), 3), "u", 2));
  }
  for (int n : {3, 5, 7}) {
    FixedPointData d = fixture_quadric(n);
    CHECK(d.components[1].moment - d.components[0].moment == 2);
  }
  CHECK_THROWS_AS(fixture_quadric(4), NotApplicableError);
  CHECK_THROWS_AS(fixture_quadric(1), NotApplicableError);
}

TEST_CASE("three-component quadric data") {
  FixedPointData d = fixture_three_component_quadric3();
  REQUIRE(d.components.size() == 3);
  CHECK(d.dim_m == 6);

  int total = 0;
  for (const auto& f : d.components) total += f.dim + 2;
  CHECK(total == d.dim_m + 2);
  CHECK(validate(d).all_passed());

  // derived middle-component data: omega_class 2, both summand chern
  // classes 1 + 2u (conic in the quadric, N_Z = O(2) + O(2))
  const FixedComponent& z = d.components[1];
  CHECK(z.dim == 2);
  CHECK(z.omega_class == 2);
  REQUIRE(z.summands.size() == 2);
  CHECK(z.summands[0].chern == one() + Rational(2) * U());
  CHECK(z.summands[1].chern == one() + Rational(2) * U());
  CHECK(z.summands[0].weight == 1);
  CHECK(z.summands[1].weight == -1);

  CHECK(euler_characteristic(d) == 4);
  CHECK(check_euler_formula(d));
  CHECK(abbv_profile(ec_constant(d, 1), d).empty());
}

TEST_CASE("the two dim-6 quadric actions agree on invariants") {
  FixedPointData two = fixture_quadric(3);
  FixedPointData three = fixture_three_component_quadric3();
  CHECK(euler_characteristic(two) == euler_characteristic(three));

  Classification cls = classify(two);
  auto [eq, ord] = total_ring(two, cls);
  auto ranks = ord.graded_ranks(6);
  CHECK(ranks == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("file round trip preserves the classification") {
  std::vector<FixedPointData> all = {fixture_cpn(4, 1), fixture_quadric(5),
                                     fixture_three_component_quadric3()};
  for (const auto& nf : negative_fixtures()) all.push_back(nf.data);
  for (const auto& d : all) {
    FixedPointData back = from_json(to_json(d));
    CHECK(back == d);
    Classification a = classify(d);
    Classification b = classify(back);
    CHECK(a.case_name() == b.case_name());
    CHECK(a.reasons == b.reasons);
  }
}

TEST_CASE("negative fixtures validate except where designed") {
  for (const auto& nf : negative_fixtures()) {
    ValidationReport rep = validate(nf.data);
    INFO(nf.name);
    if (nf.expected_check == "rank-sum") {
      CHECK(rep.has_fatal());
    } else {
      CHECK_FALSE(rep.has_fatal());
    }
  }
  CHECK(negative_fixtures().size() >= 6);
  CHECK_THROWS_AS(negative_fixture("no-such"), NotApplicableError);
}
