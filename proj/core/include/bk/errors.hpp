#pragma once

#include <stdexcept>
#include <string>

namespace bk {

/// Malformed or unsupported input (exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// s-action on a weight-0 class: no homogeneous antiderivative exists.
class DegenerateWeight : public InputError {
 public:
  using InputError::InputError;
};

class NonIsolated : public InputError {
 public:
  using InputError::InputError;
};

/// A degree cap or search bound was hit (exit code 2).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (exit code 3).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bk
