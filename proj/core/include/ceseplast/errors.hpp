#pragma once

#include <stdexcept>
#include <string>

namespace ceseplast {

/// A state with non-positive or non-finite density reached a routine that
/// needs a physical state.
class DegenerateStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested time step exceeds the configured CFL limit.
class CflViolation : public std::runtime_error {
 public:
  CflViolation(double cfl, double limit);
  double cfl() const noexcept { return cfl_; }
  double limit() const noexcept { return limit_; }

 private:
  double cfl_;
  double limit_;
};

/// Newton iteration for an implicit node update did not converge.
class NewtonFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent scenario configuration. The message names the
/// offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ceseplast
