#pragma once

#include <stdexcept>
#include <string>

namespace plaquette {

/// Argument outside the mathematical domain of an operation (|Q| >= 1, z = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative solver did not reach its residual target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated expansion is too short for the requested accuracy.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent evaluation routes of the same quantity disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A phase-space point does not satisfy the defining relations of its variety.
class OffVarietyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polynomial refers to generators the Poisson table does not know about.
class UnknownGeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace plaquette
