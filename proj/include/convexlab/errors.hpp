#pragma once

#include <stdexcept>
#include <string>

namespace convexlab {

// Malformed or out-of-contract input (bad JSON, violated preconditions).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The exact path was asked to run above its dimension cap.
class DimensionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grid operands disagree on cell size or origin alignment.
class ResolutionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Extended-precision evaluation could not certify the requested digits.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

}  // namespace convexlab
