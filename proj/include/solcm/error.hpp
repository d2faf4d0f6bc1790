#pragma once

#include <stdexcept>
#include <string>

namespace solcm {

/// Rejected input: malformed ring/prime specs, out-of-range degrees,
/// ill-shaped matrices, direction mismatches.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two computation routes, or two deduction rules, disagreed. Always a bug
/// or a contradictory set of hypotheses, never a user typo.
class InconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace solcm
