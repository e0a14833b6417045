#ifndef HAMFIX_CLASSIFY_HPP
#define HAMFIX_CLASSIFY_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamfix/errors.hpp"
#include "hamfix/fixed_data.hpp"
#include "hamfix/localization.hpp"
#include "hamfix/poly.hpp"
#include "hamfix/ring.hpp"

namespace hamfix {

enum class CaseKind { A, B, Rejected };

// Outcome of the two-component minimality classification. Case A is
// projective-space type (semifree), Case B quadric type (weights
// {1,2}); everything else is Rejected with the failed checks cited.
struct Classification {
  CaseKind kind = CaseKind::Rejected;
  std::vector<std::string> reasons;
  int i = -1;  // dim X / 2
  int j = -1;  // dim Y / 2
  Rational m = 0;  // moment gap phi(Y) - phi(X)
  std::vector<CheckResult> reports;

  bool accepted() const { return kind != CaseKind::Rejected; }
  std::string case_name() const {
    switch (kind) {
      case CaseKind::A: return "A";
      case CaseKind::B: return "B";
      default: return "Rejected";
    }
  }
};

namespace detail {

inline void classify_check(Classification& cls, const std::string& name,
                           bool ok, const std::string& witness) {
  cls.reports.push_back({name, ok, false, ok ? "" : witness});
  if (!ok) cls.reasons.push_back(name);
}

inline std::string diff_witness(const GradedPoly& got,
                                const GradedPoly& want) {
  return "got " + got.str() + ", expected " + want.str() +
         ", difference " + (got - want).str();
}

}  // namespace detail

// Theorem B as a decision procedure on fixed-point data.
inline Classification classify(const FixedPointData& data) {
  using detail::classify_check;
  using detail::diff_witness;
  Classification cls;

  ValidationReport vr = validate(data);
  if (vr.has_fatal()) {
    for (const auto& c : vr.checks)
      if (!c.passed && c.fatal) {
        cls.reports.push_back(c);
        cls.reasons.push_back(c.name);
      }
    return cls;
  }

  if (data.components.size() != 2) {
    classify_check(cls, "component-count", false,
                   "out of classification scope: " +
                       std::to_string(data.components.size()) +
                       " fixed components");
    return cls;
  }

  const FixedComponent& x = data.components[0];
  const FixedComponent& y = data.components[1];
  cls.i = x.half_dim();
  cls.j = y.half_dim();
  cls.m = y.moment - x.moment;

  if (x.dim + y.dim != data.dim_m - 2) {
    classify_check(cls, "minimal-dimension", false,
                   "dim X + dim Y = " + std::to_string(x.dim + y.dim) +
                       " != dim M - 2 = " + std::to_string(data.dim_m - 2));
    return cls;
  }

  if (const CheckResult* eff = vr.find("effectiveness"); eff && !eff->passed) {
    classify_check(cls, "effectiveness", false, eff->detail);
    return cls;
  }

  bool semifree = true;
  for (const auto& f : data.components)
    for (const auto& v : f.summands)
      if (v.weight != 1 && v.weight != -1) semifree = false;

  const GradedPoly one = poly_const(1);
  const GradedPoly u = poly_u();

  if (semifree) {
    // Case A: c(N_X) = (1+u)^{j+1}, c(N_Y) = (1+v)^{i+1}, moment gap 1.
    auto check_bundle = [&](const FixedComponent& f, int other_half,
                            int expected_weight) {
      bool ok = f.summands.size() == 1 &&
                f.summands[0].weight == expected_weight &&
                f.summands[0].rank == other_half + 1;
      GradedPoly want = truncate(
          pow(one + u, static_cast<unsigned>(other_half + 1)), "u", f.u_top());
      GradedPoly got =
          f.summands.empty() ? GradedPoly(env_ut()) : f.summands[0].chern;
      ok = ok && got == want;
      classify_check(cls, "chern-normal-bundle", ok,
                     "c(N_" + f.name + "): " + diff_witness(got, want));
    };
    check_bundle(x, cls.j, 1);
    check_bundle(y, cls.i, -1);
    classify_check(cls, "moment-gap-semifree", cls.m == 1,
                   "phi(Y) - phi(X) = " + rational_str(cls.m) +
                       ", semifree minimal data forces 1");
    cls.kind = cls.reasons.empty() ? CaseKind::A : CaseKind::Rejected;
    return cls;
  }

  // Case B candidate.
  {
    std::vector<int> distinct;
    for (const auto& v : x.summands) distinct.push_back(v.weight);
    std::sort(distinct.begin(), distinct.end());
    bool ok = distinct == std::vector<int>{1, 2};
    std::string got = "{";
    for (std::size_t k = 0; k < distinct.size(); ++k)
      got += (k ? "," : "") + std::to_string(distinct[k]);
    got += "}";
    classify_check(cls, "distinct-weights", ok,
                   "distinct weights on N_X are " + got +
                       ", a non-semifree two-component action forces {1,2}");
  }

  classify_check(cls, "dim-equality", x.dim == y.dim,
                 "dim X = " + std::to_string(x.dim) +
                     " != dim Y = " + std::to_string(y.dim) +
                     " with the action not semifree");

  {
    std::map<int, int> xi, minus_eta;
    for (const auto& v : x.summands) xi[v.weight] += v.rank;
    for (const auto& v : y.summands) minus_eta[-v.weight] += v.rank;
    classify_check(cls, "weight-mirror", xi == minus_eta,
                   "Xi_X != -Xi_Y as multisets");
  }

  classify_check(cls, "moment-gap-mz2", cls.m == 2,
                 "phi(Y) - phi(X) = " + rational_str(cls.m) +
                     ", codimension-2 M^{Z_2} forces 2");

  if (x.dim == y.dim) {
    int i = cls.i;
    // V_1 = N_{M^{Z_2}}|_F: rank 1, chern 1+u.
    // V_2 = N_F^{M^{Z_2}}: rank i, chern (1+u)^{i+1}/(1+2u); for i = 1
    // the quotient degenerates to 1.
    GradedPoly want_even = series_div(
        pow(one + u, static_cast<unsigned>(i + 1)), one + Rational(2) * u,
        {{"u", i}});
    for (const FixedComponent* f : {&x, &y}) {
      int sign = (f == &x) ? 1 : -1;
      const WeightSummand* v1 = nullptr;
      const WeightSummand* v2 = nullptr;
      for (const auto& v : f->summands) {
        if (v.weight == sign) v1 = &v;
        if (v.weight == 2 * sign) v2 = &v;
      }
      {
        bool ok = v1 && v1->rank == 1 && v1->chern == truncate(one + u, "u", f->u_top());
        classify_check(
            cls, "chern-odd-weight", ok,
            "c(N_{M^{Z_2}})|_" + f->name + ": " +
                diff_witness(v1 ? v1->chern : GradedPoly(env_ut()),
                             truncate(one + u, "u", f->u_top())));
      }
      {
        GradedPoly want = truncate(want_even, "u", f->u_top());
        bool ok = v2 && v2->rank == i && v2->chern == want;
        classify_check(
            cls, "chern-even-weight", ok,
            "c(N_" + f->name + "^{M^{Z_2}}): " +
                diff_witness(v2 ? v2->chern : GradedPoly(env_ut()), want));
      }
    }
  }

  cls.kind = cls.reasons.empty() ? CaseKind::B : CaseKind::Rejected;
  return cls;
}

// Equivariant and ordinary cohomology ring presentations of M, with
// every relation verified to vanish as a restriction tuple.
inline std::pair<RingPresentation, RingPresentation> total_ring(
    const FixedPointData& data, const Classification& cls) {
  if (!cls.accepted())
    throw NotApplicableError("total_ring: classification was rejected");
  int i = cls.i, j = cls.j, n = data.n();

  std::vector<EquivariantClass> alphas = basis_alpha(data);

  auto verify_vanishes = [&](const GradedPoly& relation,
                             const std::vector<std::string>& gen_names,
                             const std::vector<EquivariantClass>& values) {
    for (std::size_t k = 0; k < data.components.size(); ++k) {
      GradedPoly img(env_ut());
      for (const auto& [mono, c] : relation.terms()) {
        GradedPoly term = poly_const(c);
        for (std::size_t g = 0; g < gen_names.size(); ++g)
          for (int e = 0; e < mono[g]; ++e)
            term = term * values[g].restrictions[k];
        img += term;
      }
      img = truncate(img, "u", data.components[k].u_top());
      if (!img.is_zero())
        throw InconsistentDataError(
            "total_ring: relation " + relation.str() +
            " does not restrict to zero at " + data.components[k].name);
    }
  };

  if (cls.kind == CaseKind::A) {
    Env eq_env = make_env({{"x", 2}, {"t", 2}});
    RingPresentation eq;
    eq.gens = eq_env;
    GradedPoly xg = GradedPoly::var(eq_env, "x");
    GradedPoly tg = GradedPoly::var(eq_env, "t");
    GradedPoly rel = pow(xg, static_cast<unsigned>(i + 1)) *
                     pow(xg + tg, static_cast<unsigned>(j + 1));
    eq.relations = {rel};
    eq.rules = {{Monomial{static_cast<int>(n + 1), 0},
                 pow(xg, static_cast<unsigned>(i + 1)) *
                         pow(xg + tg, static_cast<unsigned>(j + 1)) *
                         Rational(-1) +
                     pow(xg, static_cast<unsigned>(n + 1))}};
    // x-tilde = alpha_1; the relation must restrict to zero.
    verify_vanishes(rel, {"x", "t"}, {alphas[1], ec_t(data)});

    Env ord_env = make_env({{"x", 2}});
    RingPresentation ord;
    ord.gens = ord_env;
    GradedPoly xo = GradedPoly::var(ord_env, "x");
    ord.relations = {pow(xo, static_cast<unsigned>(n + 1))};
    ord.rules = {{Monomial{n + 1}, GradedPoly(ord_env)}};
    return {eq, ord};
  }

  // Case B: Z[x,y,t]/(x^{i+1} - 2y, y(y + h)) with
  // h = ((x+2t)^{i+1} - x^{i+1})/2, which is integral.
  Env eq_env = make_env({{"x", 2}, {"y", n + 1}, {"t", 2}});
  RingPresentation eq;
  eq.gens = eq_env;
  GradedPoly xg = GradedPoly::var(eq_env, "x");
  GradedPoly yg = GradedPoly::var(eq_env, "y");
  GradedPoly tg = GradedPoly::var(eq_env, "t");
  GradedPoly h =
      (pow(xg + Rational(2) * tg, static_cast<unsigned>(i + 1)) -
       pow(xg, static_cast<unsigned>(i + 1))) *
      Rational(1, 2);
  if (!h.is_integral())
    throw InconsistentDataError("total_ring: h is not integral");
  GradedPoly rel1 = pow(xg, static_cast<unsigned>(i + 1)) - Rational(2) * yg;
  GradedPoly rel2 = yg * (yg + h);
  eq.relations = {rel1, rel2};
  eq.rules = {{Monomial{i + 1, 0, 0}, Rational(2) * yg},
              {Monomial{0, 2, 0}, yg * h * Rational(-1)}};
  verify_vanishes(rel1, {"x", "y", "t"},
                  {alphas[1], alphas[static_cast<std::size_t>(i) + 1],
                   ec_t(data)});
  verify_vanishes(rel2, {"x", "y", "t"},
                  {alphas[1], alphas[static_cast<std::size_t>(i) + 1],
                   ec_t(data)});

  Env ord_env = make_env({{"x", 2}, {"y", n + 1}});
  RingPresentation ord;
  ord.gens = ord_env;
  GradedPoly xo = GradedPoly::var(ord_env, "x");
  GradedPoly yo = GradedPoly::var(ord_env, "y");
  ord.relations = {pow(xo, static_cast<unsigned>(i + 1)) - Rational(2) * yo,
                   yo * yo};
  ord.rules = {{Monomial{i + 1, 0}, Rational(2) * yo},
               {Monomial{0, 2}, GradedPoly(ord_env)}};
  return {eq, ord};
}

// c^{S^1}(M) as a restriction tuple built from the data, verified
// against the closed form, plus the ordinary total Chern class c(M)
// at t = 0 (series quotient in Case B; integral coefficients).
inline std::pair<EquivariantClass, GradedPoly> total_chern(
    const FixedPointData& data, const Classification& cls) {
  if (!cls.accepted())
    throw NotApplicableError("total_chern: classification was rejected");
  int i = cls.i, j = cls.j, n = data.n();

  EquivariantClass built = equivariant_total_chern(data);
  std::vector<EquivariantClass> alphas = basis_alpha(data);
  const EquivariantClass& xt = alphas[1];

  const GradedPoly one = poly_const(1);
  for (std::size_t k = 0; k < data.components.size(); ++k) {
    const FixedComponent& f = data.components[k];
    const GradedPoly& xr = xt.restrictions[k];
    GradedPoly tr = poly_t();
    GradedPoly closed(env_ut());
    bool match;
    if (cls.kind == CaseKind::A) {
      closed = pow(one + xr, static_cast<unsigned>(i + 1)) *
               pow(one + xr + tr, static_cast<unsigned>(j + 1));
      match = truncate(closed, "u", f.u_top()) == built.restrictions[k];
    } else {
      // denominator 1 + 2x + 2t is not a series unit in t; compare
      // after clearing it.
      GradedPoly num = pow(one + xr, static_cast<unsigned>(i + 1)) *
                       pow(one + xr + Rational(2) * tr,
                           static_cast<unsigned>(i + 1)) *
                       (one + xr + tr);
      GradedPoly lhs = truncate(built.restrictions[k] *
                                    (one + Rational(2) * xr + Rational(2) * tr),
                                "u", f.u_top());
      match = lhs == truncate(num, "u", f.u_top());
    }
    if (!match)
      throw ChernMismatchError(
          "total_chern: data-built and closed-form restrictions differ at " +
          f.name);
  }

  Env ord_env = make_env({{"x", 2}});
  GradedPoly xo = GradedPoly::var(ord_env, "x");
  GradedPoly cm(ord_env);
  if (cls.kind == CaseKind::A) {
    cm = truncate(pow(GradedPoly::constant(ord_env, 1) + xo,
                      static_cast<unsigned>(n + 1)),
                  "x", n);
  } else {
    cm = series_div(pow(GradedPoly::constant(ord_env, 1) + xo,
                        static_cast<unsigned>(n + 2)),
                    GradedPoly::constant(ord_env, 1) + Rational(2) * xo,
                    {{"x", n}});
    if (!cm.is_integral())
      throw ChernMismatchError("total_chern: c(M) has non-integral "
                               "coefficients");
  }
  (void)j;
  return {built, cm};
}

// chi(X) = integral of c_top(X) = dim X/2 + 1 for each component, and
// chi(M) = chi(X) + chi(Y) = n + 1.
inline bool euler_characteristic_check(const FixedPointData& data,
                                       const Classification& cls) {
  if (!cls.accepted())
    throw NotApplicableError(
        "euler_characteristic_check: classification was rejected");
  for (const auto& f : data.components) {
    // c(F) = (1+u)^{dim F/2 + 1}; integrating c_top picks the u^{top}
    // coefficient, a binomial.
    GradedPoly cf = truncate(pow(poly_const(1) + poly_u(),
                                 static_cast<unsigned>(f.half_dim() + 1)),
                             "u", f.u_top());
    Rational top = cf.coefficient(Monomial{f.half_dim(), 0});
    if (top != f.half_dim() + 1) return false;
  }
  return euler_characteristic(data) == data.n() + 1;
}

// Remark "two": with Y of codimension two, the data near Y is forced:
// H^*(Y) = H^*_{S^1}(X)/e^{S^1}(N_X), e(N_Y) = [t], c(Y) = [c(X) c^{S^1}(N_X)].
struct Codim2Partner {
  RingPresentation quotient;     // presentation of H^*_{S^1}(X)/(u^{i+1}, e)
  std::vector<int> graded_ranks; // through degree dim M - 2
  GradedPoly euler_normal;       // reduced image of t
  GradedPoly chern;              // reduced image of c(X) c^{S^1}(N_X)
  FixedComponent forced;         // the partner component, when derivable
};

inline Codim2Partner derive_codim2_partner(const FixedComponent& x,
                                           int dim_m) {
  int rank = 0;
  for (const auto& v : x.summands) {
    if (v.weight != 1)
      throw NotApplicableError(
          "derive_codim2_partner: weights on N_X must all be +1 "
          "(codimension-2 partner forces a semifree action)");
    rank += v.rank;
  }
  if (2 * rank != dim_m - x.dim)
    throw NotApplicableError("derive_codim2_partner: rank of N_X must be "
                             "(dim M - dim X)/2");

  Codim2Partner out;
  GradedPoly e = equivariant_euler(x);
  int i = x.half_dim();

  RingPresentation pres;
  pres.gens = env_ut();
  GradedPoly ug = poly_u();
  GradedPoly tg = poly_t();
  pres.relations = {pow(ug, static_cast<unsigned>(i + 1)), e};
  // normal form: truncate u, eliminate the leading t power of e
  GradedPoly tail = e;
  {
    GradedPoly lead(env_ut());
    lead.add_term(Monomial{0, rank}, e.coefficient(Monomial{0, rank}));
    tail = (e - lead) * (Rational(-1) / e.coefficient(Monomial{0, rank}));
  }
  pres.rules = {{Monomial{i + 1, 0}, GradedPoly(env_ut())},
                {Monomial{0, rank}, tail}};
  out.quotient = pres;

  int top_degree = dim_m - 2;  // dim Y
  out.graded_ranks = pres.graded_ranks(top_degree);

  GradedPoly cx = truncate(
      pow(poly_const(1) + ug, static_cast<unsigned>(i + 1)), "u", x.u_top());
  out.euler_normal = pres.reduce(tg);
  out.chern = pres.reduce(truncate(cx * equivariant_chern(x), "u", x.u_top()));

  // Truncated-polynomial type: rank 1 in even degrees 0..dim Y, else 0.
  for (int d = 0; d <= top_degree; ++d) {
    int want = (d % 2 == 0) ? 1 : 0;
    if (out.graded_ranks[d] != want)
      throw UnsupportedPartnerError(
          "derive_codim2_partner: quotient is not of truncated-polynomial "
          "type (rank " + std::to_string(out.graded_ranks[d]) +
          " in degree " + std::to_string(d) + ")");
  }

  FixedComponent y;
  y.name = "Y";
  y.dim = top_degree;
  y.moment = x.moment + 1;  // semifree minimal gap
  y.omega_class = 1;
  WeightSummand ny;
  ny.weight = -1;
  ny.rank = 1;
  ny.chern = truncate(poly_const(1) + ug, "u", y.dim / 2);
  y.summands = {ny};
  out.forced = y;
  return out;
}

// Lemma "alpha" bounds on c_1 of the weight subbundles, the rank-1
// exceptions, and the isotropy-submanifold first-Chern rules.
inline std::vector<CheckResult> subbundle_chern_bounds(
    const FixedPointData& data, const Classification& cls) {
  if (cls.kind != CaseKind::B)
    throw NotApplicableError("subbundle_chern_bounds: Case B data required");
  std::vector<CheckResult> out;
  const Rational& m = cls.m;
  for (const FixedComponent* f :
       {&data.components[0], &data.components[1]}) {
    int zeros = 0, twos = 0;
    for (const auto& v : f->summands) {
      Rational c1 = v.chern.coefficient(Monomial{1, 0});
      Integer gamma_v = Integer(std::abs(v.weight)) * v.rank;
      // c_1(V) = nu Gamma_V u / m  (weights taken positively at X and
      // mirrored at Y, where c_1 is in the component's own generator)
      Rational nu = c1 * m / Rational(gamma_v);
      if (v.rank > 1) {
        bool ok = nu > 0 && nu < 2;
        out.push_back({"nu-bound " + f->name + " weight " +
                           std::to_string(v.weight),
                       ok, false,
                       ok ? "" : "nu = " + rational_str(nu) +
                                     " outside (0,2) for rank > 1"});
      } else {
        bool ok = nu >= 0 && nu <= 2;
        if (nu == 0) ++zeros;
        if (nu == 2) ++twos;
        out.push_back({"nu-range " + f->name + " weight " +
                           std::to_string(v.weight),
                       ok, false,
                       ok ? "" : "nu = " + rational_str(nu) +
                                     " outside [0,2] for rank 1"});
      }
    }
    out.push_back({"nu-exceptions " + f->name, zeros <= 1 && twos <= 1, false,
                   "more than one rank-1 exception"});

    // Odd part V_1 = N_{M^{Z_2}}|_F has codim(M^{Z_2}) = 2, so
    // c_1(V_1) = 2 Gamma u/m; even part V_2 = N_F^{M^{Z_2}} has
    // c_1 = 0 exactly when dim M^{Z_2} - dim F' = 2, i.e. rank 1.
    for (const auto& v : f->summands) {
      Rational c1 = v.chern.coefficient(Monomial{1, 0});
      if (std::abs(v.weight) == 1 && v.rank == 1) {
        Rational want = Rational(2) * Rational(v.rank) / m;  // Gamma_Q = 1
        out.push_back({"isotropy-odd-c1 " + f->name, c1 == want, false,
                       "c_1(N_{M^{Z_2}})|_" + f->name + " = " +
                           rational_str(c1) + "u, expected " +
                           rational_str(want) + "u"});
      }
      if (std::abs(v.weight) == 2 && v.rank == 1) {
        out.push_back({"isotropy-even-c1 " + f->name, c1 == 0, false,
                       "c_1(N_" + f->name + "^{M^{Z_2}}) = " +
                           rational_str(c1) + "u, expected 0"});
      }
    }
  }
  return out;
}

}  // namespace hamfix

#endif
