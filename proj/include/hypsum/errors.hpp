#pragma once

#include <stdexcept>
#include <string>

namespace hypsum {

/// Base class for every failure raised by the library. `what()` is a single
/// human-readable line naming the violated condition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on a pole of gamma/digamma (a nonpositive integer).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Result exceeds the binary64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Non-terminating unit-argument series whose convergence margin is <= 0.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// A parameter combination that makes a term, coefficient or closed form
/// vanish or blow up (b = c in the contiguous 3F2, a zero lower parameter).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A convergence or validity condition of a summation theorem does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: grids, spec strings, identity parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypsum
