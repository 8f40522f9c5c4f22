#pragma once

#include <stdexcept>
#include <string>

namespace hilcov {

/// World-file / input parse failure with position information.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(std::move(message)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

/// A coverage run hit a configuration the evasion rules do not cover
/// (blocked terminal, maneuver window out of range, cascading rewrites, ...).
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sequence rewrite was requested outside its preconditions.
class EvasionError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

/// The sensing contract was violated: the planner asked about a cell
/// outside the 8-neighbourhood of its current position.
class SensingError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

/// Planning over a coverage tree failed (obstacle finer than the demanded
/// resolution, maneuver crossing a resolution boundary, ...).
class PlanError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

}  // namespace hilcov
