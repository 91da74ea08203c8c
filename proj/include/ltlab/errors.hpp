#pragma once

#include <stdexcept>
#include <string>

namespace ltlab {

/// Bad input: wrong lengths, mismatched fields, non-prime characteristic.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A feasibility guard refused the instance (enumeration or expansion too large).
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series arithmetic ran out of t-adic precision before a question could be decided.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A residue-field equation met during digit lifting has no solution in the
/// configured residue field.
class ResidueUnsolvable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root lifting could not improve on the seed (the seed is not near a root,
/// or the root needs a ramified extension of the series field).
class NoGain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iteration did not reach a fixed point within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ltlab
