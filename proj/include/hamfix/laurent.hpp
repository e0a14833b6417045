#ifndef HAMFIX_LAURENT_HPP
#define HAMFIX_LAURENT_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamfix/errors.hpp"
#include "hamfix/poly.hpp"

namespace hamfix {

// GradedPoly with one distinguished variable (the equivariant
// parameter t) allowed negative exponents. Carrier for ABBV
// integrands; products terminate because the non-t part is nilpotent.
class LaurentPoly {
 public:
  LaurentPoly(Env env, std::string_view tvar)
      : env_(std::move(env)), t_index_(env_index(env_, tvar)) {}

  LaurentPoly(const GradedPoly& p, std::string_view tvar)
      : env_(p.env()), t_index_(env_index(env_, tvar)) {
    for (const auto& [m, c] : p.terms()) terms_[m] = c;
  }

  const Env& env() const { return env_; }
  int t_index() const { return t_index_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    require_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_compatible(b);
    LaurentPoly r(a.env_, a.env_[a.t_index_].name);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma);
        for (std::size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }

  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) {
    if (c == 0) {
      a.terms_.clear();
      return a;
    }
    for (auto& [m, v] : a.terms_) v *= c;
    return a;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Multiply by t^k (k may be negative).
  LaurentPoly shifted_t(int k) const {
    LaurentPoly r(env_, env_[t_index_].name);
    for (const auto& [m, c] : terms_) {
      Monomial mm(m);
      mm[t_index_] += k;
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  LaurentPoly truncated(std::string_view name, int top) const {
    int idx = env_index(env_, name);
    LaurentPoly r(env_, env_[t_index_].name);
    for (const auto& [m, c] : terms_)
      if (m[idx] <= top) r.terms_.emplace(m, c);
    return r;
  }

  // Coefficients of name^exp as a Laurent polynomial in t alone,
  // keyed by the t-exponent. All other variables must be absent.
  std::map<int, Rational> extract(std::string_view name, int exp) const {
    int idx = env_index(env_, name);
    std::map<int, Rational> out;
    for (const auto& [m, c] : terms_) {
      if (m[idx] != exp) continue;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (static_cast<int>(k) != idx && static_cast<int>(k) != t_index_ &&
            m[k] != 0)
          throw Error("extract: residual variable " + env_[k].name);
      out[m[t_index_]] += c;
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  GradedPoly to_graded() const {
    GradedPoly p(env_);
    for (const auto& [m, c] : terms_) {
      if (m[t_index_] < 0)
        throw Error("to_graded: negative power of " + env_[t_index_].name);
      p.add_term(m, c);
    }
    return p;
  }

  void require_compatible(const LaurentPoly& o) const {
    if (env_ != o.env_ || t_index_ != o.t_index_)
      throw EnvironmentError("mismatched Laurent environments");
  }

 private:
  Env env_;
  int t_index_;
  std::map<Monomial, Rational> terms_;
};

// Invert p = c * t^d * (1 + nu), where nu is supported on the declared
// nilpotent variables (name -> top surviving exponent). Returns the
// finite geometric series c^-1 t^-d sum (-nu)^k, truncated by
// nilpotency, so p * invert(p) == 1 modulo the truncation ideal.
inline LaurentPoly laurent_invert(
    const LaurentPoly& p,
    const std::vector<std::pair<std::string, int>>& nilpotent_top) {
  const Env& env = p.env();
  std::vector<int> tops(env.size(), -1);
  int bound = 0;
  for (const auto& [name, top] : nilpotent_top) {
    tops[env_index(env, name)] = top;
    bound += top;
  }

  // Locate the unique pure-t term c*t^d.
  Rational lead = 0;
  int d = 0;
  for (const auto& [m, c] : p.terms()) {
    bool pure = true;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (static_cast<int>(k) != p.t_index() && m[k] != 0) pure = false;
    if (pure) {
      if (lead != 0)
        throw DivergentExpansionError(
            "laurent_invert: second pure-t term; the correction is not "
            "nilpotent-supported");
      lead = c;
      d = m[p.t_index()];
    }
  }
  if (lead == 0)
    throw SingularEulerError("laurent_invert: zero leading coefficient");

  const std::string tname = env[p.t_index()].name;
  LaurentPoly nu(env, tname);  // p/(c t^d) - 1
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(m);
    mm[p.t_index()] -= d;
    bool pure = true, supported = false;
    for (std::size_t k = 0; k < mm.size(); ++k) {
      if (static_cast<int>(k) == p.t_index()) continue;
      if (mm[k] != 0) {
        pure = false;
        if (tops[k] >= 0) supported = true;
      }
    }
    if (pure) continue;
    if (!supported)
      throw DivergentExpansionError(
          "laurent_invert: correction term not nilpotent-supported");
    nu.add_term(std::move(mm), c / lead);
  }

  auto truncate_all = [&](LaurentPoly q) {
    for (const auto& [name, top] : nilpotent_top) q = q.truncated(name, top);
    return q;
  };

  LaurentPoly geom(env, tname);
  geom.add_term(Monomial(env.size(), 0), 1);
  LaurentPoly powk = geom;
  LaurentPoly minus_nu = nu * Rational(-1);
  for (int k = 1; k <= bound; ++k) {
    powk = truncate_all(powk * minus_nu);
    if (powk.is_zero()) break;
    geom += powk;
  }
  return (geom * (Rational(1) / lead)).shifted_t(-d);
}

}  // namespace hamfix

#endif
