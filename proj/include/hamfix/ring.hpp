#ifndef HAMFIX_RING_HPP
#define HAMFIX_RING_HPP

#include <functional>
#include <string>
#include <vector>

#include "hamfix/errors.hpp"
#include "hamfix/poly.hpp"

namespace hamfix {

// Rewrite rule: monomial lhs -> polynomial rhs, applied to a fixpoint.
struct ReductionRule {
  Monomial lhs;
  GradedPoly rhs;
};

// Generators, relations and a confluent normal form for an output
// cohomology ring presentation (ordinary or equivariant).
struct RingPresentation {
  Env gens;
  std::vector<GradedPoly> relations;
  std::vector<ReductionRule> rules;

  static bool divides(const Monomial& lhs, const Monomial& m) {
    for (std::size_t k = 0; k < lhs.size(); ++k)
      if (m[k] < lhs[k]) return false;
    return true;
  }

  GradedPoly reduce(GradedPoly p, int max_steps = 100000) const {
    for (int step = 0; step < max_steps; ++step) {
      const Monomial* pick = nullptr;
      const ReductionRule* rule = nullptr;
      for (const auto& r : rules) {
        for (const auto& [m, c] : p.terms())
          if (divides(r.lhs, m) && (!pick || m > *pick)) {
            pick = &m;
            rule = &r;
          }
        if (pick) break;
      }
      if (!pick) return p;
      Monomial rest(*pick);
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= rule->lhs[k];
      GradedPoly cof(gens);
      cof.add_term(rest, p.coefficient(*pick));
      GradedPoly drop(gens);
      drop.add_term(*pick, p.coefficient(*pick));
      p = p - drop + cof * rule->rhs;
    }
    throw Error("RingPresentation::reduce did not terminate");
  }

  // Every relation must reduce to zero under the presentation's own
  // normal form.
  bool relations_reduce_to_zero() const {
    for (const auto& r : relations)
      if (!reduce(r).is_zero()) return false;
    return true;
  }

  // Rank of each graded piece 0..max_degree by enumerating irreducible
  // monomials in the generators.
  std::vector<int> graded_ranks(int max_degree) const {
    std::vector<int> ranks(max_degree + 1, 0);
    Monomial m(gens.size(), 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t k, int deg) {
      if (k == gens.size()) {
        bool irreducible = true;
        for (const auto& r : rules)
          if (divides(r.lhs, m)) irreducible = false;
        if (irreducible) ++ranks[deg];
        return;
      }
      for (int e = 0; deg + e * gens[k].degree <= max_degree; ++e) {
        m[k] = e;
        walk(k + 1, deg + e * gens[k].degree);
      }
      m[k] = 0;
    };
    walk(0, 0);
    return ranks;
  }

  std::string str() const {
    std::string out = "Z[";
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k) out += ", ";
      out += gens[k].name;
    }
    out += "]/(";
    for (std::size_t k = 0; k < relations.size(); ++k) {
      if (k) out += ", ";
      out += relations[k].str();
    }
    out += ")";
    return out;
  }
};

}  // namespace hamfix

#endif
