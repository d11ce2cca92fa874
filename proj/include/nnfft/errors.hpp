#pragma once

#include <stdexcept>
#include <string>

namespace nnfft {

/// Thrown when an input violates a documented parameter constraint.
/// The message names the failing inequality.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a numeric precondition fails at run time, e.g. a window
/// Fourier transform that is not strictly positive where it is divided by.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nnfft
