#pragma once

#include <stdexcept>
#include <string>

namespace etalehom {

/// Malformed input: wrong dimensions, bad characteristic, broken annotations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a mathematical precondition
/// (non-commuting square, d1*d2 != 0, disconnected stabilizer where
/// connectedness is required, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace etalehom
