#pragma once

#include <stdexcept>
#include <string>

namespace ridgecalc {

/// Caller violated an operation's contract (mismatched bases, bad dimensions,
/// dependent directions, singular transforms).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Geometric precondition failure: directions that are not pairwise
/// linearly independent, or a witness requested for dependent vectors.
class GeometryError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition on the *data* does not hold (e.g. T·a is not
/// rational in rationalize()).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear system has no solution (ridge polynomial decomposition with too
/// few directions).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ridgecalc
