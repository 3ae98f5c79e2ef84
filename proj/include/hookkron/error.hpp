#pragma once

#include <stdexcept>
#include <string>

namespace hookkron {

// Malformed input text (words, partitions, tableaux, option values).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input parses but violates a precondition of the operation.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// pi/C operators applied to an object whose southwest letter has the wrong bar.
struct ColorStateError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// Exact arithmetic left its safe range.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace hookkron
