#pragma once

#include <stdexcept>
#include <string>

namespace symalg {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero scalar") {}
};

// Operand shapes do not fit together (non-square input, size mismatch,
// nonpositive dimension).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed scalar, matrix or parameter text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A constructor or operation received parameters outside its admissible set.
// The message names the violated constraint.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same fact disagree. Always a bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace symalg
