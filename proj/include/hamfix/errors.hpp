#ifndef HAMFIX_ERRORS_HPP
#define HAMFIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamfix {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands built over different variable environments.
struct EnvironmentError : Error {
  using Error::Error;
};

// Graded substitution with a replacement of the wrong degree.
struct GradingError : Error {
  using Error::Error;
};

// series_div denominator without unit constant term, or a
// non-convergent expansion.
struct DivisionError : Error {
  using Error::Error;
};

// laurent_invert: vanishing pure-t leading coefficient.
struct SingularEulerError : Error {
  using Error::Error;
};

// laurent_invert: correction term not supported on nilpotent variables.
struct DivergentExpansionError : Error {
  using Error::Error;
};

// A restriction tuple that is not a genuine equivariant class
// (negative t-powers survive the ABBV sum).
struct InconsistentDataError : Error {
  using Error::Error;
};

// Operation invoked outside its stated precondition.
struct NotApplicableError : Error {
  using Error::Error;
};

// basis_alpha produced a non-integral restriction coefficient.
struct BasisConstructionError : Error {
  using Error::Error;
};

// Data-built and closed-form Chern restrictions disagree.
struct ChernMismatchError : Error {
  using Error::Error;
};

// derive_codim2_partner: quotient is not of truncated-polynomial type.
struct UnsupportedPartnerError : Error {
  using Error::Error;
};

// Expression or file syntax error, with a position for the caret.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg), position(pos) {}
};

}  // namespace hamfix

#endif
