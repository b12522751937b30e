#pragma once

#include <stdexcept>
#include <string>

namespace aweno {

/// Invalid grid, boundary, problem or run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state with nonpositive density, pressure or internal energy.
class PhysicalStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The interface-averaged state cannot be diagonalized.
class DecompositionError : public PhysicalStateError {
 public:
  using PhysicalStateError::PhysicalStateError;
};

/// A Runge-Kutta stage produced an invalid state or an interface flux
/// could not be evaluated.
class StepFailure : public std::runtime_error {
 public:
  StepFailure(const std::string& what, int stage, std::string location)
      : std::runtime_error(what), stage_(stage), location_(std::move(location)) {}

  int stage() const { return stage_; }
  const std::string& location() const { return location_; }

 private:
  int stage_;
  std::string location_;
};

}  // namespace aweno
