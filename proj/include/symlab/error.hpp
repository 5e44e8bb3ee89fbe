#pragma once

#include <stdexcept>
#include <string>

namespace symlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed syntax, unsupported field, violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public InputError {
 public:
  DivisionByZero() : InputError("division by zero") {}
  using InputError::InputError;
};

/// Raised when two computations that must agree do not (for example a finite
/// limit map that fails the automorphism check). Always indicates a bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace symlab
