#pragma once

#include <stdexcept>
#include <string>

#include "flq/types.hpp"

namespace flq {

// State where the decoupling matrix is not invertible (or too close to it).
class SingularityError : public std::runtime_error {
 public:
  SingularityError(std::string what, Vec state)
      : std::runtime_error(std::move(what)), state(std::move(state)) {}
  Vec state;
};

// Non-finite value encountered while integrating or rolling out.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::string what, int step)
      : std::runtime_error(std::move(what)), step(step) {}
  int step;
};

// The stacked gain-coupling system of the LQ game is numerically singular.
class LqNoSolutionError : public std::runtime_error {
 public:
  LqNoSolutionError(std::string what, int step)
      : std::runtime_error(std::move(what)), step(step) {}
  int step;
};

// Backtracking ran below the step-size floor without an acceptable step.
class LinesearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flq
