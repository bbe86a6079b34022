#pragma once

#include <stdexcept>
#include <string>

namespace qreset {

// Operand shapes do not match (non-square input, dimension mismatch).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition was violated (non-Hermitian generator,
// non-stationary reset state, ...).
struct ContractViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numeric parameter is out of its admissible range.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested feature has no meaning for the given inputs
// (e.g. trajectories of a generalized schedule).
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Map inversion refused: condition number above the configured threshold.
class NonInvertibleError : public std::runtime_error {
 public:
  NonInvertibleError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

// A survival sequence left [0, 1]; `step` is the offending time.
class InvalidSurvivalError : public std::runtime_error {
 public:
  InvalidSurvivalError(const std::string& what, int step)
      : std::runtime_error(what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

// Survival hit zero where a reset probability still had to be derived.
class DegenerateSurvivalError : public std::runtime_error {
 public:
  DegenerateSurvivalError(const std::string& what, int step)
      : std::runtime_error(what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

}  // namespace qreset
