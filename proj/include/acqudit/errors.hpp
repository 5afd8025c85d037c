#pragma once

#include <stdexcept>
#include <string>

namespace acqudit {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma function evaluated at (or within machine tolerance of) a
// non-positive integer.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Argument outside the domain of an operation (eps <= 0, k = 0, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Non-positive trap parameters, or no bound state at all.
class InvalidTrap : public Error {
 public:
  explicit InvalidTrap(const std::string& msg) : Error(msg) {}
};

// Trap deep enough to hold more than one bound state.
class MultipleStatesError : public Error {
 public:
  explicit MultipleStatesError(const std::string& msg) : Error(msg) {}
};

// Trajectory, kernel set, or table built on incompatible grids.
class GridMismatch : public Error {
 public:
  explicit GridMismatch(const std::string& msg) : Error(msg) {}
};

// Iterative solver failed to reach the requested tolerance.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& msg, double last_update)
      : Error(msg), last_update_norm(last_update) {}
  double last_update_norm;
};

// Position-constrained solve missed the requested final trap position.
class BoundaryMiss : public Error {
 public:
  explicit BoundaryMiss(const std::string& msg) : Error(msg) {}
};

// Invalid or inconsistent run configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace acqudit
