#pragma once

#include <stdexcept>
#include <string>

namespace nec {

// Malformed input: unknown labels, bad files, inconsistent objects.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition of an operation does not hold
// (map not monotone, fixed point missing from a subposet, ...).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace nec
