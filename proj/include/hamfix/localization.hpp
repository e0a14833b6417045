#ifndef HAMFIX_LOCALIZATION_HPP
#define HAMFIX_LOCALIZATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hamfix/errors.hpp"
#include "hamfix/fixed_data.hpp"
#include "hamfix/laurent.hpp"

namespace hamfix {

// ABBV sum as a Laurent polynomial in t: t-power -> coefficient.
using AbbvProfile = std::map<int, Rational>;

// sum_F integral_F cls|_F / e^{S^1}(N_F), computed by inverting each
// Euler class as a finite geometric series and extracting the
// u^{dim F/2} coefficient.
inline AbbvProfile abbv_profile(const EquivariantClass& cls,
                                const FixedPointData& data) {
  AbbvProfile total;
  for (std::size_t k = 0; k < data.components.size(); ++k) {
    const FixedComponent& f = data.components[k];
    GradedPoly euler = equivariant_euler(f);
    LaurentPoly inv =
        laurent_invert(LaurentPoly(euler, "t"), {{"u", f.u_top()}});
    LaurentPoly prod =
        (LaurentPoly(cls.restrictions[k], "t") * inv).truncated("u", f.u_top());
    for (const auto& [tp, c] : prod.extract("u", f.half_dim())) {
      total[tp] += c;
      if (total[tp] == 0) total.erase(tp);
    }
  }
  return total;
}

// Integral of a genuine equivariant class: asserts the strictly
// negative t-powers cancel across the fixed-point sum (the
// genuineness test for a restriction tuple) and returns the constant
// term. Positive powers remain exactly when deg(cls) > dim M (the
// pushforward lands in positive degree); classes of degree <= dim M
// integrate to a pure constant.
inline Rational abbv_integrate(const EquivariantClass& cls,
                               const FixedPointData& data) {
  AbbvProfile profile = abbv_profile(cls, data);
  for (const auto& [tp, c] : profile)
    if (tp < 0)
      throw InconsistentDataError(
          "abbv_integrate: residual t^" + std::to_string(tp) +
          " coefficient " + rational_str(c) +
          "; the restriction tuple is not a genuine equivariant class");
  auto it = profile.find(0);
  return it == profile.end() ? Rational(0) : it->second;
}

// c(F) * c^{S^1}(N_F) per component, with c(F) = (1+u)^{dim F/2 + 1}
// (every in-scope component is of truncated-polynomial type).
inline EquivariantClass equivariant_total_chern(const FixedPointData& data) {
  EquivariantClass out;
  for (const auto& f : data.components) {
    GradedPoly cf = truncate(pow(poly_const(1) + poly_u(),
                                 static_cast<unsigned>(f.half_dim() + 1)),
                             "u", f.u_top());
    out.restrictions.push_back(
        truncate(cf * equivariant_chern(f), "u", f.u_top()));
  }
  return out;
}

// Degree-2k part c_k^{S^1}(M).
inline EquivariantClass equivariant_chern_part(const FixedPointData& data,
                                               int k) {
  EquivariantClass total = equivariant_total_chern(data);
  EquivariantClass out;
  for (const auto& p : total.restrictions)
    out.restrictions.push_back(p.homogeneous_part(2 * k));
  return out;
}

// Reduce p modulo the ideal (u^{u_top+1}, e) in Q[u,t], where e has a
// nonzero pure-t leading term Lambda t^D: iterated leading-term
// elimination in t. The remainder has all t-exponents < D; it is zero
// exactly when p lies in the ideal.
inline GradedPoly reduce_by_euler(GradedPoly p, const GradedPoly& e,
                                  int u_top) {
  p = truncate(p, "u", u_top);
  Rational lead = 0;
  int dlead = 0;
  for (const auto& [m, c] : e.terms())
    if (m[0] == 0) {
      lead = c;
      dlead = m[1];
    }
  if (lead == 0)
    throw SingularEulerError("reduce_by_euler: no pure-t leading term");
  while (true) {
    // highest t-exponent at or above D
    const Monomial* pick = nullptr;
    for (const auto& [m, c] : p.terms())
      if (m[1] >= dlead && (!pick || m[1] > (*pick)[1])) pick = &m;
    if (!pick) break;
    Monomial q{(*pick)[0], (*pick)[1] - dlead};
    Rational coef = p.coefficient(*pick) / lead;
    GradedPoly qp(env_ut());
    qp.add_term(q, coef);
    p = truncate(p - qp * e, "u", u_top);
  }
  return p;
}

// True when cls|_Y is divisible by e in Q[u,t]/u^{u_top+1}.
inline bool divisible_by_euler(const GradedPoly& p, const GradedPoly& e,
                               int u_top) {
  return reduce_by_euler(p, e, u_top).is_zero();
}

// Reversed action: weights and moments negated, components reversed.
// Applying a statement about the minimal component to the reversed
// data yields its mirror at the maximal component.
inline FixedPointData reversed(const FixedPointData& data) {
  FixedPointData r;
  r.dim_m = data.dim_m;
  for (auto it = data.components.rbegin(); it != data.components.rend();
       ++it) {
    FixedComponent f = *it;
    f.moment = -f.moment;
    for (auto& v : f.summands) v.weight = -v.weight;
    r.components.push_back(std::move(f));
  }
  return r;
}

namespace detail {
inline bool euler_formula_at_min(const FixedPointData& data) {
  const FixedComponent& x = data.min_component();
  GradedPoly rhs = poly_const(Rational(lambda_total(x)));
  for (std::size_t k = 1; k < data.components.size(); ++k) {
    const FixedComponent& f = data.components[k];
    Rational gap = f.moment - x.moment;
    GradedPoly factor =
        poly_t() + (Rational(x.omega_class) / gap) * poly_u();
    rhs = rhs * pow(factor, static_cast<unsigned>(f.half_dim() + 1));
  }
  rhs = truncate(rhs, "u", x.u_top());
  return rhs == equivariant_euler(x);
}
}  // namespace detail

// e^{S^1}(N_X) = Lambda_X prod_F (t + [omega|_X]/(phi(F)-phi(X)))^{dim F/2+1}
// at the minimal component, and the mirrored identity at the maximal
// component. Requires the minimal-dimension identity.
inline bool check_euler_formula(const FixedPointData& data) {
  int total = 0;
  for (const auto& f : data.components) total += f.dim + 2;
  if (total != data.dim_m + 2)
    throw NotApplicableError(
        "check_euler_formula: minimal-dimension identity fails");
  return detail::euler_formula_at_min(data) &&
         detail::euler_formula_at_min(reversed(data));
}

// The alpha_k basis of H^*_{S^1}(M;Z) as a Z[t]-module, specialized to
// two fixed components of minimal dimension:
//   semifree:  alpha_k = (c_1^{S^1}(M) - (j+1)t)^k / (n+1)^k        k <= i
//              (c_1 - (j+1)t)^{i+1} (c_1 + (i+1)t)^{k-i-1}/(n+1)^k  k > i
//   otherwise: alpha_k = (c_1 - nt)^k / n^k                         k <= i
//              (c_1 - nt)^{i+1} (c_1 + nt)^{k-i-1} / (2 n^k)        k > i
// Every restriction must come out integral.
inline std::vector<EquivariantClass> basis_alpha(const FixedPointData& data) {
  if (data.components.size() != 2)
    throw NotApplicableError("basis_alpha: exactly two components required");
  const FixedComponent& x = data.components[0];
  const FixedComponent& y = data.components[1];
  int i = x.half_dim(), j = y.half_dim(), n = data.n();
  if (i + j + 1 != n)
    throw NotApplicableError("basis_alpha: minimal dimension fails");
  bool semifree = true;
  for (const auto& f : data.components)
    for (const auto& v : f.summands)
      if (v.weight != 1 && v.weight != -1) semifree = false;

  EquivariantClass c1 = equivariant_chern_part(data, 1);
  EquivariantClass tcls = ec_t(data);
  std::vector<EquivariantClass> alphas;
  for (int k = 0; k <= n; ++k) {
    EquivariantClass a;
    if (semifree) {
      EquivariantClass lo = ec_sub(c1, ec_scale(tcls, Rational(j + 1)));
      if (k <= i) {
        a = ec_scale(ec_pow(lo, static_cast<unsigned>(k), data),
                     Rational(1) / int_pow(Integer(n + 1), k));
      } else {
        EquivariantClass hi = ec_add(c1, ec_scale(tcls, Rational(i + 1)));
        a = ec_mul(ec_pow(lo, static_cast<unsigned>(i + 1), data),
                   ec_pow(hi, static_cast<unsigned>(k - i - 1), data), data);
        a = ec_scale(a, Rational(1) / int_pow(Integer(n + 1), k));
      }
    } else {
      EquivariantClass lo = ec_sub(c1, ec_scale(tcls, Rational(n)));
      if (k <= i) {
        a = ec_scale(ec_pow(lo, static_cast<unsigned>(k), data),
                     Rational(1) / int_pow(Integer(n), k));
      } else {
        EquivariantClass hi = ec_add(c1, ec_scale(tcls, Rational(n)));
        a = ec_mul(ec_pow(lo, static_cast<unsigned>(i + 1), data),
                   ec_pow(hi, static_cast<unsigned>(k - i - 1), data), data);
        a = ec_scale(a, Rational(1) / (2 * int_pow(Integer(n), k)));
      }
    }
    if (!ec_is_integral(a))
      throw BasisConstructionError(
          "basis_alpha: alpha_" + std::to_string(k) +
          " has a non-integral restriction; data lies outside the "
          "two-component classification");
    alphas.push_back(std::move(a));
  }
  return alphas;
}

// Gram matrix of the alpha basis under the ABBV pairing. Entries must
// be integers; complementary degrees pair along the antidiagonal.
inline std::vector<std::vector<Rational>> pairing_matrix(
    const std::vector<EquivariantClass>& basis, const FixedPointData& data) {
  std::vector<std::vector<Rational>> m;
  for (const auto& a : basis) {
    std::vector<Rational> row;
    for (const auto& b : basis) {
      Rational v = abbv_integrate(ec_mul(a, b, data), data);
      if (!is_integer(v))
        throw InconsistentDataError("pairing_matrix: non-integer entry " +
                                    rational_str(v));
      row.push_back(std::move(v));
    }
    m.push_back(std::move(row));
  }
  return m;
}

// Corollary TW' quotient map: f determined by u -> v + t(phi(X)-phi(Y))
// must send (u^{i+1}, e^{S^1}(N_X)) into (v^{j+1}, e^{S^1}(N_Y)), and
// symmetrically for the inverse. Verified by normal-form reduction.
inline bool tw_quotient_check(const FixedPointData& data) {
  if (data.components.size() != 2)
    throw NotApplicableError("tw_quotient_check: two components required");
  const FixedComponent& x = data.components[0];
  const FixedComponent& y = data.components[1];
  Rational m = y.moment - x.moment;
  GradedPoly ex = equivariant_euler(x);
  GradedPoly ey = equivariant_euler(y);

  auto maps_to_zero = [](const GradedPoly& p, const GradedPoly& image_gen,
                         const GradedPoly& euler, int top) {
    GradedPoly image = substitute(p, "u", image_gen);
    return reduce_by_euler(image, euler, top).is_zero();
  };

  GradedPoly fwd = poly_u() - m * poly_t();  // f(u) = v + t(phi X - phi Y)
  GradedPoly bwd = poly_u() + m * poly_t();  // f^{-1}(v) = u + t(phi Y - phi X)

  GradedPoly ux = pow(poly_u(), static_cast<unsigned>(x.half_dim() + 1));
  GradedPoly vy = pow(poly_u(), static_cast<unsigned>(y.half_dim() + 1));

  return maps_to_zero(ux, fwd, ey, y.u_top()) &&
         maps_to_zero(ex, fwd, ey, y.u_top()) &&
         maps_to_zero(vy, bwd, ex, x.u_top()) &&
         maps_to_zero(ey, bwd, ex, x.u_top());
}

// Prop. multiple-Euler specialized to two components: a class vanishing
// at X restricts on Y to a multiple of e^{S^1}(N_Y^-).
inline bool multiple_euler_check(const EquivariantClass& cls,
                                 const FixedPointData& data) {
  if (data.components.size() != 2)
    throw NotApplicableError("multiple_euler_check: two components required");
  if (!cls.restrictions[0].is_zero())
    throw NotApplicableError(
        "multiple_euler_check: restriction below F must vanish");
  const FixedComponent& y = data.components[1];
  return divisible_by_euler(cls.restrictions[1],
                            equivariant_euler_negative(y), y.u_top());
}

// chi(M) = sum over components of chi(F) = dim F/2 + 1, cross-checked
// against the ABBV integral of the top equivariant Chern class.
inline int euler_characteristic(const FixedPointData& data) {
  int chi = 0;
  for (const auto& f : data.components) chi += f.half_dim() + 1;
  Rational via_abbv =
      abbv_integrate(equivariant_chern_part(data, data.n()), data);
  if (via_abbv != chi)
    throw InconsistentDataError(
        "euler characteristic mismatch: sum of components gives " +
        std::to_string(chi) + ", ABBV of c_n gives " +
        rational_str(via_abbv));
  return chi;
}

}  // namespace hamfix

#endif
