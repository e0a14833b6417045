#ifndef HAMFIX_RATIONAL_HPP
#define HAMFIX_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "hamfix/errors.hpp"

namespace hamfix {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& q) {
  return q.get_den() == 1;
}

// Reduced "p/q", integers without "/1".
inline std::string rational_str(const Rational& q) {
  return q.get_str();
}

// Strict decimal-free rational: ^-?[0-9]+(/[0-9]+)?$ with nonzero
// denominator. Used for the "moment" field of the JSON schema.
inline Rational parse_rational(const std::string& s) {
  std::size_t i = 0;
  auto fail = [&](const char* msg) -> Rational {
    throw ParseError(std::string("bad rational '") + s + "': " + msg, i);
  };
  if (s.empty()) return fail("empty");
  if (s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) return fail("expected digits");
  if (i < s.size()) {
    if (s[i] != '/') return fail("expected '/' or end");
    ++i;
    std::size_t den_start = i, den_digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++den_digits;
    if (den_digits == 0 || i != s.size()) return fail("bad denominator");
    if (s.substr(den_start, den_digits).find_first_not_of('0') ==
        std::string::npos)
      return fail("zero denominator");
  }
  Rational q(s);
  q.canonicalize();
  return q;
}

}  // namespace hamfix

#endif
