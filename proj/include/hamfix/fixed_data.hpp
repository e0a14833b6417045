#ifndef HAMFIX_FIXED_DATA_HPP
#define HAMFIX_FIXED_DATA_HPP

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hamfix/errors.hpp"
#include "hamfix/poly.hpp"
#include "hamfix/rational.hpp"

namespace hamfix {

// Canonical environment for per-component restrictions: u is the
// degree-2 generator of the component, t the equivariant parameter.
inline const Env& env_ut() {
  static const Env e = make_env({{"u", 2}, {"t", 2}});
  return e;
}

inline GradedPoly poly_u() { return GradedPoly::var(env_ut(), "u"); }
inline GradedPoly poly_t() { return GradedPoly::var(env_ut(), "t"); }
inline GradedPoly poly_const(Rational c) {
  return GradedPoly::constant(env_ut(), std::move(c));
}

// Copy a polynomial into an equal-shape environment (same degrees,
// new names). Used only for display.
inline GradedPoly with_env(const GradedPoly& p, Env env) {
  if (env.size() != p.env().size())
    throw EnvironmentError("with_env: size mismatch");
  GradedPoly q(std::move(env));
  for (const auto& [m, c] : p.terms()) q.add_term(m, c);
  return q;
}

// One isotropy weight subbundle V_k of a normal bundle: the circle acts
// with weight k; chern is the total Chern class in the host component's
// generator u (constant term 1).
struct WeightSummand {
  int weight = 0;
  int rank = 0;
  GradedPoly chern = poly_const(1);

  friend bool operator==(const WeightSummand&, const WeightSummand&) = default;
};

struct FixedComponent {
  std::string name;
  int dim = 0;  // real dimension, even
  Rational moment = 0;
  int omega_class = 1;  // [omega|_F] = omega_class * u
  std::vector<WeightSummand> summands;

  int half_dim() const { return dim / 2; }
  // u^{half_dim()+1} == 0 in H^*(F;Z) = Z[u]/u^{half_dim()+1}
  int u_top() const { return dim / 2; }

  friend bool operator==(const FixedComponent&, const FixedComponent&) =
      default;
};

struct FixedPointData {
  int dim_m = 0;
  std::vector<FixedComponent> components;  // sorted by moment

  int n() const { return dim_m / 2; }
  const FixedComponent& min_component() const { return components.front(); }
  const FixedComponent& max_component() const { return components.back(); }

  friend bool operator==(const FixedPointData&, const FixedPointData&) =
      default;
};

// lambda_F: number of negative weights counted with multiplicity; the
// Morse-Bott index of the moment map at F is 2*lambda_F.
inline int morse_index(const FixedComponent& f) {
  int lam = 0;
  for (const auto& v : f.summands)
    if (v.weight < 0) lam += v.rank;
  return lam;
}

// Gamma_F: sum of the weights with multiplicity.
inline Integer gamma(const FixedComponent& f) {
  Integer g = 0;
  for (const auto& v : f.summands) g += Integer(v.weight) * v.rank;
  return g;
}

inline Integer int_pow(Integer base, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Lambda_F^-: product of the negative weights with multiplicity
// (empty product = 1).
inline Integer lambda_minus(const FixedComponent& f) {
  Integer p = 1;
  for (const auto& v : f.summands)
    if (v.weight < 0) p *= int_pow(v.weight, v.rank);
  return p;
}

// Lambda_F: product of all weights with multiplicity.
inline Integer lambda_total(const FixedComponent& f) {
  Integer p = 1;
  for (const auto& v : f.summands) p *= int_pow(v.weight, v.rank);
  return p;
}

// c^{S^1}(V) = sum_k c_k (1 + lambda t)^{d-k}, with c_k the degree-2k
// part of the chern class; at t = 0 this recovers c(V).
inline GradedPoly equivariant_chern_summand(const WeightSummand& v) {
  GradedPoly one_lt = poly_const(1) + Rational(v.weight) * poly_t();
  GradedPoly out(env_ut());
  for (int k = 0; k <= v.rank; ++k) {
    GradedPoly ck = v.chern.homogeneous_part(2 * k);
    if (ck.is_zero()) continue;
    out += ck * pow(one_lt, static_cast<unsigned>(v.rank - k));
  }
  return out;
}

// e^{S^1}(V) = sum_k c_k (lambda t)^{d-k}; top term (lambda t)^d.
inline GradedPoly equivariant_euler_summand(const WeightSummand& v) {
  GradedPoly lt = Rational(v.weight) * poly_t();
  GradedPoly out(env_ut());
  for (int k = 0; k <= v.rank; ++k) {
    GradedPoly ck = v.chern.homogeneous_part(2 * k);
    if (ck.is_zero()) continue;
    out += ck * pow(lt, static_cast<unsigned>(v.rank - k));
  }
  return out;
}

inline GradedPoly equivariant_chern(const FixedComponent& f) {
  GradedPoly p = poly_const(1);
  for (const auto& v : f.summands) p = p * equivariant_chern_summand(v);
  return truncate(p, "u", f.u_top());
}

inline GradedPoly equivariant_euler(const FixedComponent& f) {
  GradedPoly p = poly_const(1);
  for (const auto& v : f.summands) p = p * equivariant_euler_summand(v);
  return truncate(p, "u", f.u_top());
}

inline GradedPoly equivariant_euler_negative(const FixedComponent& f) {
  GradedPoly p = poly_const(1);
  for (const auto& v : f.summands)
    if (v.weight < 0) p = p * equivariant_euler_summand(v);
  return truncate(p, "u", f.u_top());
}

// A class in H^*_{S^1}(M) represented by its restrictions to the fixed
// components, each reduced mod u^{dim F/2 + 1}. Restriction tuples
// represent classes faithfully (the restriction map is injective).
struct EquivariantClass {
  std::vector<GradedPoly> restrictions;

  friend bool operator==(const EquivariantClass&, const EquivariantClass&) =
      default;
};

inline EquivariantClass ec_constant(const FixedPointData& data, Rational c) {
  EquivariantClass e;
  e.restrictions.assign(data.components.size(), poly_const(std::move(c)));
  return e;
}

inline EquivariantClass ec_t(const FixedPointData& data) {
  EquivariantClass e;
  e.restrictions.assign(data.components.size(), poly_t());
  return e;
}

inline EquivariantClass ec_add(const EquivariantClass& a,
                               const EquivariantClass& b) {
  EquivariantClass r;
  for (std::size_t k = 0; k < a.restrictions.size(); ++k)
    r.restrictions.push_back(a.restrictions[k] + b.restrictions[k]);
  return r;
}

inline EquivariantClass ec_sub(const EquivariantClass& a,
                               const EquivariantClass& b) {
  EquivariantClass r;
  for (std::size_t k = 0; k < a.restrictions.size(); ++k)
    r.restrictions.push_back(a.restrictions[k] - b.restrictions[k]);
  return r;
}

inline EquivariantClass ec_scale(const EquivariantClass& a,
                                 const Rational& c) {
  EquivariantClass r;
  for (const auto& p : a.restrictions) r.restrictions.push_back(p * c);
  return r;
}

inline EquivariantClass ec_mul(const EquivariantClass& a,
                               const EquivariantClass& b,
                               const FixedPointData& data) {
  EquivariantClass r;
  for (std::size_t k = 0; k < a.restrictions.size(); ++k)
    r.restrictions.push_back(truncate(a.restrictions[k] * b.restrictions[k],
                                      "u", data.components[k].u_top()));
  return r;
}

inline EquivariantClass ec_pow(const EquivariantClass& a, unsigned e,
                               const FixedPointData& data) {
  EquivariantClass acc = ec_constant(data, 1);
  for (unsigned k = 0; k < e; ++k) acc = ec_mul(acc, a, data);
  return acc;
}

inline bool ec_is_integral(const EquivariantClass& a) {
  for (const auto& p : a.restrictions)
    if (!p.is_integral()) return false;
  return true;
}

// Common homogeneous degree of the nonzero restrictions, if one exists.
inline std::optional<int> ec_degree(const EquivariantClass& a) {
  std::optional<int> d;
  for (const auto& p : a.restrictions) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return std::nullopt;
    int pd = *p.degree();
    if (d && *d != pd) return std::nullopt;
    d = pd;
  }
  return d;
}

// u-tilde based at a component: the restriction to F' is
// omega_class(F') u + (phi(base) - phi(F')) t.
inline EquivariantClass u_tilde(const FixedPointData& data,
                                std::size_t base_index) {
  EquivariantClass e;
  const Rational& phi0 = data.components[base_index].moment;
  for (const auto& f : data.components) {
    GradedPoly p = Rational(f.omega_class) * poly_u() +
                   (phi0 - f.moment) * poly_t();
    e.restrictions.push_back(truncate(p, "u", f.u_top()));
  }
  return e;
}

struct CheckResult {
  std::string name;
  bool passed = true;
  bool fatal = false;  // meaningful when failed
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool has_fatal() const {
    for (const auto& c : checks)
      if (!c.passed && c.fatal) return true;
    return false;
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {
inline void check(ValidationReport& rep, const std::string& name, bool ok,
                  bool fatal, const std::string& detail_on_fail) {
  rep.checks.push_back({name, ok, fatal, ok ? "" : detail_on_fail});
}
}  // namespace detail

// Consistency checks on fixed-point data. Always returns a report;
// fatal failures mark data no downstream operation should touch.
inline ValidationReport validate(const FixedPointData& data) {
  using detail::check;
  ValidationReport rep;

  bool structural = true;
  std::string why;
  if (data.dim_m <= 0 || data.dim_m % 2 != 0) {
    structural = false;
    why = "dim_M must be even and positive";
  }
  if (data.components.size() < 2) {
    structural = false;
    why = "a compact Hamiltonian S^1-manifold has at least two fixed "
          "components (max and min)";
  }
  for (const auto& f : data.components) {
    if (f.dim < 0 || f.dim % 2 != 0) {
      structural = false;
      why = f.name + ": component dimension must be even and nonnegative";
    }
    if (f.omega_class < 1) {
      structural = false;
      why = f.name + ": omega_class must be a positive integer";
    }
    std::set<int> seen;
    for (const auto& v : f.summands) {
      if (v.weight == 0) {
        structural = false;
        why = f.name + ": zero isotropy weight";
      }
      if (v.rank < 1) {
        structural = false;
        why = f.name + ": summand rank must be positive";
      }
      if (!seen.insert(v.weight).second) {
        structural = false;
        why = f.name + ": duplicate weight " + std::to_string(v.weight);
      }
      if (v.chern.constant_term() != 1) {
        structural = false;
        why = f.name + ": chern constant term must be 1";
      }
      auto d = v.chern.degree();
      if (d && (*d > 2 * v.rank || *d > f.dim)) {
        structural = false;
        why = f.name + ": chern terms above degree bound";
      }
      for (const auto& [m, c] : v.chern.terms())
        if (m[1] != 0) {  // env_ut: slot 1 is t
          structural = false;
          why = f.name + ": chern must not involve t";
        }
    }
  }
  check(rep, "structure", structural, true, why);
  if (!structural) return rep;

  bool ranks_ok = true;
  std::string rank_why;
  for (const auto& f : data.components) {
    int sum = 0;
    for (const auto& v : f.summands) sum += v.rank;
    if (2 * sum != data.dim_m - f.dim) {
      ranks_ok = false;
      rank_why = f.name + ": sum of ranks " + std::to_string(sum) +
                 " != (dim M - dim F)/2 = " +
                 std::to_string((data.dim_m - f.dim) / 2);
    }
  }
  check(rep, "rank-sum", ranks_ok, true, rank_why);

  bool ordered = true;
  for (std::size_t k = 0; k + 1 < data.components.size(); ++k)
    if (!(data.components[k].moment < data.components[k + 1].moment))
      ordered = false;
  check(rep, "moment-ordering", ordered, true,
        "moment values must be strictly increasing");

  bool signs = true;
  for (const auto& v : data.min_component().summands)
    if (v.weight < 0) signs = false;
  for (const auto& v : data.max_component().summands)
    if (v.weight > 0) signs = false;
  check(rep, "weight-signs", signs, true,
        "minimum must have all-positive weights, maximum all-negative");

  {
    bool mono = true;
    for (std::size_t a = 0; a < data.components.size(); ++a)
      for (std::size_t b = 0; b < data.components.size(); ++b) {
        bool phi_lt = data.components[a].moment < data.components[b].moment;
        bool lam_lt =
            morse_index(data.components[a]) < morse_index(data.components[b]);
        if (phi_lt != lam_lt) mono = false;
      }
    check(rep, "index-moment-ordering", mono, false,
          "phi(F') < phi(F) exactly if lambda_{F'} < lambda_F fails");
  }

  {
    Integer g = 0;
    for (const auto& f : data.components)
      for (const auto& v : f.summands)
        g = gcd(g, Integer(v.weight < 0 ? -v.weight : v.weight));
    check(rep, "effectiveness", g == 1, false,
          "gcd of all isotropy weights is " + g.get_str() + ", not 1");
  }

  bool minimal = true;
  {
    int total = 0;
    for (const auto& f : data.components) total += f.dim + 2;
    minimal = (total == data.dim_m + 2);
    check(rep, "minimal-dimension", minimal, false,
          "sum(dim F + 2) = " + std::to_string(total) +
              " != dim M + 2 = " + std::to_string(data.dim_m + 2));
  }

  if (minimal) {
    bool cover = true;
    std::string cover_why;
    for (int i = 0; 2 * i <= data.dim_m; ++i) {
      int hits = 0;
      for (const auto& f : data.components) {
        int lam = morse_index(f);
        if (0 <= 2 * i - 2 * lam && 2 * i - 2 * lam <= f.dim) ++hits;
      }
      if (hits != 1) {
        cover = false;
        cover_why = "degree " + std::to_string(2 * i) + " covered by " +
                    std::to_string(hits) + " components";
      }
    }
    check(rep, "morse-coverage", cover, false, cover_why);
  }

  {
    bool integral_gaps = true;
    for (std::size_t a = 0; a + 1 < data.components.size(); ++a)
      for (std::size_t b = a + 1; b < data.components.size(); ++b)
        if (!is_integer(data.components[b].moment -
                        data.components[a].moment))
          integral_gaps = false;
    check(rep, "integral-moment-gaps", integral_gaps, false,
          "moment gaps are not integers; [omega] primitive integral "
          "normalization (omega_class) is suspect");
  }

  return rep;
}

}  // namespace hamfix

#endif
