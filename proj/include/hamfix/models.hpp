#ifndef HAMFIX_MODELS_HPP
#define HAMFIX_MODELS_HPP

#include <string>
#include <vector>

#include "hamfix/errors.hpp"
#include "hamfix/fixed_data.hpp"
#include "hamfix/localization.hpp"

namespace hamfix {

// Example 1: the circle acting on CP^n by rotating the first j+1
// homogeneous coordinates. X = CP^{n-j-1} at the minimum, Y = CP^j at
// the maximum.
inline FixedPointData fixture_cpn(int n, int j) {
  if (n < 1 || j < 0 || j > n - 1)
    throw NotApplicableError("fixture_cpn: need n >= 1 and 0 <= j <= n-1");
  FixedPointData data;
  data.dim_m = 2 * n;

  FixedComponent x;
  x.name = "X";
  x.dim = 2 * (n - j - 1);
  x.moment = 0;
  WeightSummand nx;
  nx.weight = 1;
  nx.rank = j + 1;
  nx.chern = truncate(pow(poly_const(1) + poly_u(),
                          static_cast<unsigned>(j + 1)),
                      "u", x.u_top());
  x.summands = {nx};

  FixedComponent y;
  y.name = "Y";
  y.dim = 2 * j;
  y.moment = 1;
  WeightSummand ny;
  ny.weight = -1;
  ny.rank = n - j;
  ny.chern = truncate(pow(poly_const(1) + poly_u(),
                          static_cast<unsigned>(n - j)),
                      "u", y.u_top());
  y.summands = {ny};

  data.components = {x, y};
  return data;
}

// Example 2: the Grassmannian of oriented 2-planes in R^{n+2}, n odd,
// with the action rotating all of C^{(n+1)/2}. Both components are
// CP^{(n-1)/2}; weights {1,2} at X mirrored at Y, moment gap 2.
inline FixedPointData fixture_quadric(int n) {
  if (n < 3 || n % 2 == 0)
    throw NotApplicableError("fixture_quadric: need odd n >= 3");
  int i = (n - 1) / 2;
  FixedPointData data;
  data.dim_m = 2 * n;

  GradedPoly even_chern =
      series_div(pow(poly_const(1) + poly_u(), static_cast<unsigned>(i + 1)),
                 poly_const(1) + Rational(2) * poly_u(), {{"u", i}});

  FixedComponent x;
  x.name = "X";
  x.dim = 2 * i;
  x.moment = 0;
  WeightSummand v1;
  v1.weight = 1;
  v1.rank = 1;
  v1.chern = truncate(poly_const(1) + poly_u(), "u", x.u_top());
  WeightSummand v2;
  v2.weight = 2;
  v2.rank = i;
  v2.chern = even_chern;
  x.summands = {v1, v2};

  FixedComponent y = x;
  y.name = "Y";
  y.moment = 2;
  y.summands[0].weight = -1;
  y.summands[1].weight = -2;

  data.components = {x, y};
  return data;
}

// The second action on the dim-6 quadric (rotating only the C factor
// of R^5 = C x R^3): two isolated extrema and a middle CP^1. Only the
// dimensions are prescribed; the weight and Chern data on the middle
// component is pinned down here by localization consistency --
// abbv(1) = 0 forces the two rank-1 summand c_1's to agree, vanishing
// of the negative t-residues of u-tilde fixes omega_class(Z), and the
// same for c_1^{S^1}(M) fixes the summand c_1.
inline FixedPointData fixture_three_component_quadric3() {
  auto candidate = [](int omega_z, int c1) {
    FixedPointData data;
    data.dim_m = 6;

    FixedComponent pmin;
    pmin.name = "p-";
    pmin.dim = 0;
    pmin.moment = -1;
    pmin.summands = {{1, 3, poly_const(1)}};

    FixedComponent z;
    z.name = "Z";
    z.dim = 2;
    z.moment = 0;
    z.omega_class = omega_z;
    GradedPoly chern =
        truncate(poly_const(1) + Rational(c1) * poly_u(), "u", 1);
    z.summands = {{1, 1, chern}, {-1, 1, chern}};

    FixedComponent pmax;
    pmax.name = "p+";
    pmax.dim = 0;
    pmax.moment = 1;
    pmax.summands = {{-1, 3, poly_const(1)}};

    data.components = {pmin, z, pmax};
    return data;
  };

  auto genuine = [](const AbbvProfile& prof) {
    for (const auto& [tp, c] : prof)
      if (tp < 0 && c != 0) return false;
    return true;
  };

  FixedPointData result;
  int hits = 0;
  for (int omega_z = 1; omega_z <= 4; ++omega_z)
    for (int c1 = 0; c1 <= 4; ++c1) {
      FixedPointData data = candidate(omega_z, c1);
      if (!abbv_profile(ec_constant(data, 1), data).empty()) continue;
      EquivariantClass ut = u_tilde(data, 0);
      bool ok = true;
      for (unsigned k = 1; k <= 3 && ok; ++k)
        ok = genuine(abbv_profile(ec_pow(ut, k, data), data));
      if (ok) ok = genuine(abbv_profile(equivariant_chern_part(data, 1), data));
      if (ok) ok = (euler_characteristic(data) == 4);
      if (ok) {
        result = data;
        ++hits;
      }
    }
  if (hits != 1)
    throw Error("fixture_three_component_quadric3: consistency search found " +
                std::to_string(hits) + " solutions");
  return result;
}

struct NegativeFixture {
  std::string name;
  FixedPointData data;
  std::string expected_check;  // classification report entry that must fire
};

// Mutation corpus: each fixture breaks exactly one necessary condition
// and names the check expected to reject it.
inline std::vector<NegativeFixture> negative_fixtures() {
  std::vector<NegativeFixture> out;

  {
    FixedPointData d = fixture_cpn(3, 1);
    d.components[1].moment = 2;
    out.push_back({"m2-semifree", d, "moment-gap-semifree"});
  }
  {
    // weights {1,3} on N_X (and mirrored), in place of {1,2}
    FixedPointData d = fixture_cpn(3, 1);
    GradedPoly c1u = truncate(poly_const(1) + poly_u(), "u", 1);
    d.components[0].summands = {{1, 1, c1u}, {3, 1, poly_const(1)}};
    d.components[1].summands = {{-1, 1, c1u}, {-3, 1, poly_const(1)}};
    out.push_back({"weights-1-3", d, "distinct-weights"});
  }
  {
    FixedPointData d = fixture_quadric(5);
    // swap the ranks of Y's two summands: Xi_X = {1,2,2}, -Xi_Y = {1,1,2}
    d.components[1].summands[0].rank = 2;
    d.components[1].summands[0].chern =
        truncate(pow(poly_const(1) + poly_u(), 2), "u", 2);
    d.components[1].summands[1].rank = 1;
    d.components[1].summands[1].chern = poly_const(1);
    out.push_back({"xi-mirror", d, "weight-mirror"});
  }
  {
    // dim X != dim Y with weight 2 present
    FixedPointData d;
    d.dim_m = 8;
    FixedComponent x;
    x.name = "X";
    x.dim = 2;
    x.moment = 0;
    x.summands = {{1, 1, truncate(poly_const(1) + poly_u(), "u", 1)},
                  {2, 2, poly_const(1)}};
    FixedComponent y;
    y.name = "Y";
    y.dim = 4;
    y.moment = 2;
    y.summands = {{-1, 1, truncate(poly_const(1) + poly_u(), "u", 2)},
                  {-2, 1, poly_const(1)}};
    d.components = {x, y};
    out.push_back({"dim-mismatch", d, "dim-equality"});
  }
  {
    FixedPointData d = fixture_cpn(4, 1);
    d.components[1].summands[0].chern =
        truncate(pow(poly_const(1) + Rational(2) * poly_u(), 3), "u", 1);
    out.push_back({"chern-perturbed-a", d, "chern-normal-bundle"});
  }
  {
    FixedPointData d = fixture_quadric(5);
    d.components[0].summands[0].chern =
        truncate(poly_const(1) + Rational(2) * poly_u(), "u", 2);
    out.push_back({"chern-perturbed-b", d, "chern-odd-weight"});
  }
  {
    FixedPointData d = fixture_quadric(3);
    d.components[0].summands[1].rank = 2;
    out.push_back({"rank-sum", d, "rank-sum"});
  }
  {
    FixedPointData d = fixture_quadric(3);
    d.components[1].moment = 1;
    out.push_back({"m1-quadric", d, "moment-gap-mz2"});
  }

  return out;
}

inline FixedPointData negative_fixture(const std::string& name) {
  for (auto& nf : negative_fixtures())
    if (nf.name == name) return nf.data;
  throw NotApplicableError("unknown negative fixture '" + name + "'");
}

}  // namespace hamfix

#endif
