#ifndef HAMFIX_TESTS_ORACLE_ABBV_HPP
#define HAMFIX_TESTS_ORACLE_ABBV_HPP

// Independent route for the ABBV sum: per component, the inverse of
// the Euler class is computed coefficient-by-coefficient in u by the
// triangular recursion R_0 = E_0^{-1}, R_a = -E_0^{-1} sum E_s R_{a-s},
// with all t-arithmetic on explicit Laurent coefficient maps. No
// geometric series, no code shared with hamfix::laurent_invert.

#include <map>

#include "hamfix/fixed_data.hpp"

namespace hamfix::oracle {

using TLaurent = std::map<int, Rational>;  // t-power -> coefficient

inline TLaurent tl_add(const TLaurent& a, const TLaurent& b) {
  TLaurent r = a;
  for (const auto& [k, c] : b) {
    r[k] += c;
    if (r[k] == 0) r.erase(k);
  }
  return r;
}

inline TLaurent tl_mul(const TLaurent& a, const TLaurent& b) {
  TLaurent r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      r[ka + kb] += ca * cb;
      if (r[ka + kb] == 0) r.erase(ka + kb);
    }
  return r;
}

inline TLaurent tl_scale(const TLaurent& a, const Rational& c) {
  TLaurent r;
  if (c == 0) return r;
  for (const auto& [k, v] : a) r[k] = v * c;
  return r;
}

// Divide by the monomial c t^d.
inline TLaurent tl_div_mono(const TLaurent& a, const Rational& c, int d) {
  TLaurent r;
  for (const auto& [k, v] : a) r[k - d] = v / c;
  return r;
}

// u-coefficients of a polynomial in (u, t).
inline std::vector<TLaurent> u_slices(const GradedPoly& p, int top) {
  std::vector<TLaurent> out(top + 1);
  for (const auto& [m, c] : p.terms()) {
    if (m[0] > top) continue;
    out[m[0]][m[1]] = c;
  }
  return out;
}

inline TLaurent abbv_reference(const EquivariantClass& cls,
                               const FixedPointData& data) {
  TLaurent total;
  for (std::size_t k = 0; k < data.components.size(); ++k) {
    const FixedComponent& f = data.components[k];
    int d = f.half_dim();
    GradedPoly e = equivariant_euler(f);
    std::vector<TLaurent> eu = u_slices(e, d);
    if (eu[0].size() != 1)
      throw std::logic_error("oracle: E_0 is not a single monomial");
    Rational lead = eu[0].begin()->second;
    int dlead = eu[0].begin()->first;

    std::vector<TLaurent> inv(d + 1);
    inv[0] = tl_div_mono({{0, 1}}, lead, dlead);
    for (int a = 1; a <= d; ++a) {
      TLaurent acc;
      for (int s = 1; s <= a; ++s)
        acc = tl_add(acc, tl_mul(eu[s], inv[a - s]));
      inv[a] = tl_scale(tl_div_mono(acc, lead, dlead), Rational(-1));
    }

    std::vector<TLaurent> cs = u_slices(cls.restrictions[k], d);
    TLaurent contrib;
    for (int a = 0; a <= d; ++a)
      contrib = tl_add(contrib, tl_mul(cs[a], inv[d - a]));
    total = tl_add(total, contrib);
  }
  return total;
}

}  // namespace hamfix::oracle

#endif
