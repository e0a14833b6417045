#ifndef HAMFIX_WEIGHTS_HPP
#define HAMFIX_WEIGHTS_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hamfix/errors.hpp"
#include "hamfix/fixed_data.hpp"

namespace hamfix {

// Multiset of positive isotropy weights: distinct key -> multiplicity.
struct WeightMultiset {
  std::map<int, int> entries;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) =
      default;

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [a, m] : entries) {
      if (!first) out += ", ";
      first = false;
      out += std::to_string(a) + ":" + std::to_string(m);
    }
    return out + "}";
  }
};

inline int keys_gcd(const WeightMultiset& w) {
  int g = 0;
  for (const auto& [a, m] : w.entries) g = std::gcd(g, a);
  return g;
}

// W = -W mod a for every key a of W, residues compared as multisets
// (weights divisible by a sit at residue 0 on both sides).
inline bool closure_check(const WeightMultiset& w) {
  for (const auto& [a, ma] : w.entries) {
    std::map<int, int> pos, neg;
    for (const auto& [b, mb] : w.entries) {
      pos[b % a] += mb;
      neg[((-b) % a + a) % a] += mb;
    }
    if (pos != neg) return false;
  }
  return true;
}

// Set-level necessary condition (the hypothesis of Lemma I): for each
// pair of keys a_i, a_k there is a key a_j with a_i + a_j = 0 mod a_k.
// Any multiset passing closure_check has a key set passing this.
inline bool set_closure_check(const std::vector<int>& keys) {
  for (int ai : keys)
    for (int ak : keys) {
      bool found = false;
      for (int aj : keys)
        if ((ai + aj) % ak == 0) found = true;
      if (!found) return false;
    }
  return true;
}

// All key sets {a_1 < ... < a_N} with a_N <= max_value, gcd 1,
// satisfying the Lemma I hypothesis. Lemma I predicts the survivors
// are exactly the prefixes {1,...,N}.
inline std::vector<std::vector<int>> lemmaI_enumerate(int max_value) {
  if (max_value < 1 || max_value > 20)
    throw NotApplicableError("lemmaI_enumerate: max_value out of bounds");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << max_value); ++mask) {
    std::vector<int> keys;
    for (int a = 1; a <= max_value; ++a)
      if (mask & (1u << (a - 1))) keys.push_back(a);
    int g = 0;
    for (int a : keys) g = std::gcd(g, a);
    if (g != 1) continue;
    if (set_closure_check(keys)) out.push_back(std::move(keys));
  }
  return out;
}

struct LemmaIIReport {
  bool applicable = false;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return applicable;
  }
};

// The six conclusions of the appendix lemma for a closure-satisfying
// multiset with relatively prime keys.
inline LemmaIIReport lemmaII_verify(const WeightMultiset& w) {
  LemmaIIReport rep;
  if (!closure_check(w) || keys_gcd(w) != 1) return rep;
  rep.applicable = true;
  auto check = [&rep](const std::string& name, bool ok,
                      const std::string& why) {
    rep.checks.push_back({name, ok, false, ok ? "" : why});
  };
  int n = static_cast<int>(w.entries.size());
  std::vector<int> keys, m(1, 0);  // m[1..N]
  for (const auto& [a, mult] : w.entries) {
    keys.push_back(a);
    m.push_back(mult);
  }
  bool prefix = true;
  for (int k = 0; k < n; ++k)
    if (keys[k] != k + 1) prefix = false;
  check("keys-prefix", prefix, "keys " + w.str() + " are not {1..N}");
  check("N<=6", n <= 6, "N = " + std::to_string(n) + " > 6");
  if (!prefix) return rep;
  if (n == 3) check("N3-relations", m[2] == m[1], "m2 != m1");
  if (n == 4)
    check("N4-relations", m[3] == m[1] && m[2] == m[1] + m[4],
          "m3 = m1 and m2 = m1 + m4 fail");
  if (n == 5)
    check("N5-relations",
          m[4] == m[1] && m[1] == 2 * m[5] && m[3] == m[2] &&
              m[2] == 3 * m[5],
          "m4 = m1 = 2 m5 and m3 = m2 = 3 m5 fail");
  if (n == 6)
    check("N6-relations",
          m[2] == m[3] && m[3] == m[4] && m[2] == 2 * m[1] &&
              m[2] == 2 * m[5] && m[2] == 2 * m[6],
          "m2 = m3 = m4 = 2 m1 = 2 m5 = 2 m6 fail");
  return rep;
}

namespace detail {

// DFS over multiplicity vectors with residue-interval pruning: after a
// partial assignment, each residue count mod any key lies in an
// interval; mismatched paired intervals kill the branch early.
inline void admissible_dfs(const std::vector<int>& keys, int max_mult,
                           std::vector<int>& mult, std::size_t pos,
                           std::vector<WeightMultiset>& out) {
  std::size_t n = keys.size();
  if (pos == n) {
    WeightMultiset w;
    for (std::size_t k = 0; k < n; ++k) w.entries[keys[k]] = mult[k];
    if (closure_check(w)) out.push_back(std::move(w));
    return;
  }
  for (int v = 1; v <= max_mult; ++v) {
    mult[pos] = v;
    bool feasible = true;
    for (std::size_t ki = 0; ki < n && feasible; ++ki) {
      int a = keys[ki];
      // sum interval per residue class
      std::map<int, std::pair<int, int>> lo_hi_pos, lo_hi_neg;
      for (std::size_t bi = 0; bi < n; ++bi) {
        int rp = keys[bi] % a;
        int rn = ((-keys[bi]) % a + a) % a;
        int lo = (bi <= pos) ? mult[bi] : 1;
        int hi = (bi <= pos) ? mult[bi] : max_mult;
        auto& p = lo_hi_pos.emplace(rp, std::make_pair(0, 0)).first->second;
        p.first += lo;
        p.second += hi;
        auto& q = lo_hi_neg.emplace(rn, std::make_pair(0, 0)).first->second;
        q.first += lo;
        q.second += hi;
      }
      for (int r = 0; r < a && feasible; ++r) {
        auto ip = lo_hi_pos.count(r) ? lo_hi_pos[r] : std::make_pair(0, 0);
        auto in = lo_hi_neg.count(r) ? lo_hi_neg[r] : std::make_pair(0, 0);
        if (ip.second < in.first || in.second < ip.first) feasible = false;
      }
    }
    if (feasible) admissible_dfs(keys, max_mult, mult, pos + 1, out);
  }
  mult[pos] = 0;
}

}  // namespace detail

// Exhaustive search for admissible weight multisets: keys within
// {1..max_key} with gcd 1, multiplicities in [1..max_mult], passing
// closure_check. The appendix predicts every survivor has keys {1..N}
// with N <= 6 and the Lemma II multiplicity pattern.
inline std::vector<WeightMultiset> admissible_enumerate(int max_key,
                                                        int max_mult) {
  if (max_key < 1 || max_key > 14)
    throw NotApplicableError("admissible_enumerate: max_key out of bounds");
  if (max_mult < 1 || max_mult > 8)
    throw NotApplicableError("admissible_enumerate: max_mult out of bounds");
  std::vector<WeightMultiset> out;
  for (const auto& keys : lemmaI_enumerate(max_key)) {
    std::vector<int> mult(keys.size(), 0);
    detail::admissible_dfs(keys, max_mult, mult, 0, out);
  }
  return out;
}

}  // namespace hamfix

#endif
