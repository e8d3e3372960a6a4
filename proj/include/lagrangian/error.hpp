#pragma once

#include <stdexcept>

namespace lagrangian {

// Malformed input or a violated precondition. The CLI maps it to exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A nonempty edge level has no coefficient.
class MissingCoefficient : public InputError {
 public:
  using InputError::InputError;
};

// A generator was asked for parameters outside the window it can realize.
class InfeasibleWindow : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace lagrangian
