#pragma once

#include <stdexcept>

namespace zetascan {

// Error taxonomy. Argument and precondition violations derive from
// argument_error (CLI exit code 2); failures to reach a requested numerical
// tolerance derive from numerical_error (CLI exit code 1).

struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input sits on or too close to a pole / outside the defining domain.
struct domain_error : argument_error {
  using argument_error::argument_error;
};

// A zero table does not cover the window a sum needs.
struct coverage_error : argument_error {
  using argument_error::argument_error;
};

// Grid too coarse to resolve the profile's feature width.
struct resolution_error : argument_error {
  using argument_error::argument_error;
};

// Truncation length tau(eps) does not fit in the feasible range.
struct truncation_infeasible_error : argument_error {
  using argument_error::argument_error;
};

// Parameters outside the regime an algorithm supports.
struct unsupported_regime_error : argument_error {
  using argument_error::argument_error;
};

// Malformed input file; messages carry the offending line number.
struct parse_error : argument_error {
  using argument_error::argument_error;
};

// Requested tolerance could not be reached.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zetascan
