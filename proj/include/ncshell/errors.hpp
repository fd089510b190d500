#pragma once

#include <stdexcept>
#include <string>

namespace ncshell {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by zero and similar failures of exact arithmetic.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Unsupported Coxeter type or parameter.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for this input (e.g. a lattice query on a
// noncrystallographic type, a non-Coxeter top element).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Linearly dependent input where independence is required.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical property that must hold was observed to fail.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

// An internal invariant was broken; signals a bug in the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncshell
