#ifndef HAMFIX_POLY_HPP
#define HAMFIX_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamfix/errors.hpp"
#include "hamfix/rational.hpp"

namespace hamfix {

// A formal variable with its (even, positive) cohomological degree.
struct Variable {
  std::string name;
  int degree = 2;

  friend bool operator==(const Variable&, const Variable&) = default;
};

using Env = std::vector<Variable>;
using Monomial = std::vector<int>;  // exponent per environment slot

inline Env make_env(std::initializer_list<Variable> vars) {
  return Env(vars);
}

inline int env_index(const Env& env, std::string_view name) {
  for (std::size_t k = 0; k < env.size(); ++k)
    if (env[k].name == name) return static_cast<int>(k);
  throw EnvironmentError("unknown variable '" + std::string(name) + "'");
}

// Exact multivariate polynomial, graded by cohomological degree.
// Terms map monomials to nonzero rational coefficients; the zero
// polynomial stores no terms and reports degree() == nullopt (the
// -infinity sentinel).
class GradedPoly {
 public:
  GradedPoly() = default;
  explicit GradedPoly(Env env) : env_(std::move(env)) {}

  static GradedPoly constant(Env env, Rational c) {
    GradedPoly p(std::move(env));
    if (c != 0) p.terms_[Monomial(p.env_.size(), 0)] = std::move(c);
    return p;
  }

  static GradedPoly var(const Env& env, std::string_view name, int exp = 1) {
    GradedPoly p(env);
    Monomial m(env.size(), 0);
    m[env_index(env, name)] = exp;
    p.terms_[std::move(m)] = 1;
    return p;
  }

  const Env& env() const { return env_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int monomial_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t k = 0; k < env_.size(); ++k) d += m[k] * env_[k].degree;
    return d;
  }

  // Max graded degree; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      int md = monomial_degree(m);
      if (!d || md > *d) d = md;
    }
    return d;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const {
    return coefficient(Monomial(env_.size(), 0));
  }

  bool is_integral() const {
    for (const auto& [m, c] : terms_)
      if (!is_integer(c)) return false;
    return true;
  }

  bool is_homogeneous() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      int md = monomial_degree(m);
      if (d && md != *d) return false;
      d = md;
    }
    return true;
  }

  GradedPoly homogeneous_part(int deg) const {
    GradedPoly r(env_);
    for (const auto& [m, c] : terms_)
      if (monomial_degree(m) == deg) r.terms_[m] = c;
    return r;
  }

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

  GradedPoly operator-() const {
    GradedPoly r(env_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  GradedPoly& operator+=(const GradedPoly& o) {
    require_same_env(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  GradedPoly& operator-=(const GradedPoly& o) {
    require_same_env(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  GradedPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) {
    a += b;
    return a;
  }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) {
    a -= b;
    return a;
  }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    a.require_same_env(b);
    GradedPoly r(a.env_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma);
        for (std::size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }
  friend GradedPoly operator*(GradedPoly a, const Rational& c) {
    a *= c;
    return a;
  }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) {
    a *= c;
    return a;
  }
  friend GradedPoly operator+(GradedPoly a, const Rational& c) {
    a.add_term(Monomial(a.env_.size(), 0), c);
    return a;
  }
  friend GradedPoly operator+(const Rational& c, GradedPoly a) {
    return std::move(a) + c;
  }
  friend GradedPoly operator-(GradedPoly a, const Rational& c) {
    a.add_term(Monomial(a.env_.size(), 0), -c);
    return a;
  }

  friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

  // Terms sorted by total degree, then graded-lex in environment order
  // (callers keep t last). Coefficients print reduced, "p/q" form.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [this](auto* a, auto* b) {
      int da = monomial_degree(a->first), db = monomial_degree(b->first);
      if (da != db) return da < db;
      return a->first > b->first;  // higher early-variable power first
    });
    std::string out;
    bool first = true;
    for (auto* t : order) {
      Rational c = t->second;
      bool neg = c < 0;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      Rational a = neg ? Rational(-c) : c;
      std::string mono;
      for (std::size_t k = 0; k < env_.size(); ++k) {
        int e = t->first[k];
        if (e == 0) continue;
        mono += env_[k].name;
        if (e != 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        out += rational_str(a);
      } else {
        if (a != 1) {
          if (is_integer(a))
            out += rational_str(a);
          else
            out += "(" + rational_str(a) + ")";
        }
        out += mono;
      }
    }
    return out;
  }

  void require_same_env(const GradedPoly& o) const {
    if (env_ != o.env_)
      throw EnvironmentError("mismatched variable environments");
  }

 private:
  Env env_;
  std::map<Monomial, Rational> terms_;
};

inline GradedPoly pow(const GradedPoly& p, unsigned k) {
  GradedPoly acc = GradedPoly::constant(p.env(), 1);
  GradedPoly base = p;
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return acc;
}

// Drop every term with exponent of `name` above `top`. Idempotent.
inline GradedPoly truncate(const GradedPoly& p, std::string_view name,
                           int top) {
  int idx = env_index(p.env(), name);
  GradedPoly r(p.env());
  for (const auto& [m, c] : p.terms())
    if (m[idx] <= top) r.add_term(m, c);
  return r;
}

using TruncationIdeal = std::vector<std::pair<std::string, int>>;

inline GradedPoly truncate(const GradedPoly& p, const TruncationIdeal& ideal) {
  GradedPoly r = p;
  for (const auto& [name, top] : ideal) r = truncate(r, name, top);
  return r;
}

// Homomorphic substitution var -> repl. Graded unless allow_degree_change.
inline GradedPoly substitute(const GradedPoly& p, std::string_view name,
                             const GradedPoly& repl,
                             bool allow_degree_change = false) {
  int idx = env_index(p.env(), name);
  p.require_same_env(repl);
  if (!allow_degree_change) {
    auto rd = repl.degree();
    int vd = p.env()[idx].degree;
    // Each monomial of the replacement must have the variable's degree.
    if (rd && (!repl.is_homogeneous() || *rd != vd))
      throw GradingError("substitution for '" + std::string(name) +
                         "' is not homogeneous of degree " +
                         std::to_string(vd));
  }
  GradedPoly out(p.env());
  for (const auto& [m, c] : p.terms()) {
    Monomial rest(m);
    int e = rest[idx];
    rest[idx] = 0;
    GradedPoly term(p.env());
    term.add_term(std::move(rest), c);
    if (e > 0) term = term * pow(repl, static_cast<unsigned>(e));
    out += term;
  }
  return out;
}

// Truncated power-series division: q with q*den == num modulo the
// truncation ideal. Requires den to have constant term +-1 and every
// other den term to touch a truncated variable (else the geometric
// expansion does not terminate).
inline GradedPoly series_div(const GradedPoly& num, const GradedPoly& den,
                             const TruncationIdeal& ideal) {
  num.require_same_env(den);
  GradedPoly d = truncate(den, ideal);
  Rational c = d.constant_term();
  if (c != 1 && c != -1)
    throw DivisionError("series_div: denominator constant term " +
                        rational_str(c) + " is not a unit over Z");
  GradedPoly correction = d - c;  // every term must be nilpotent
  int bound = 0;
  {
    std::vector<int> tops(num.env().size(), -1);
    for (const auto& [name, top] : ideal)
      tops[env_index(num.env(), name)] = top;
    for (const auto& [m, cc] : correction.terms()) {
      bool touches = false;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] > 0 && tops[k] >= 0) touches = true;
      if (!touches)
        throw DivisionError(
            "series_div: denominator term outside the truncation ideal");
    }
    for (int t : tops)
      if (t >= 0) bound += t;
  }
  // 1/den = c * sum_k (-(den-c)/c)^k  (c^2 = 1)
  GradedPoly step = truncate(correction * Rational(-1) * c, ideal);
  GradedPoly inv = GradedPoly::constant(num.env(), 1);
  GradedPoly powk = GradedPoly::constant(num.env(), 1);
  for (int k = 1; k <= bound; ++k) {
    powk = truncate(powk * step, ideal);
    if (powk.is_zero()) break;
    inv += powk;
  }
  inv *= c;
  return truncate(truncate(num, ideal) * inv, ideal);
}

}  // namespace hamfix

#endif
