#pragma once

#include <stdexcept>
#include <string>

namespace rcdg {

/// Argument outside the domain of an EOS or geometric routine.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A conserved state (or control-point value) outside the admissible set.
class InadmissibleState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative solve that did not reach tolerance.
class ConvergenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hypothesis of the positivity-preserving limiter does not hold
/// (cell average left the admissible set).
class PreconditionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad run configuration or command-line input.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rcdg
