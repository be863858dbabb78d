#pragma once

#include <stdexcept>
#include <string>

namespace qiso {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural precondition failed (bad dimensions, invalid state, bad
// parameter). The CLI maps these to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// An iterative kernel ran out of budget. The CLI maps these to exit code 3.
struct NumericalError : Error {
  using Error::Error;
};

struct NotHermitian : ValidationError {
  using ValidationError::ValidationError;
};

struct NotPSD : ValidationError {
  using ValidationError::ValidationError;
};

struct NotUnitary : ValidationError {
  using ValidationError::ValidationError;
};

struct NotNormalized : ValidationError {
  using ValidationError::ValidationError;
};

struct NotTracePreserving : ValidationError {
  using ValidationError::ValidationError;
};

struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct BadQubitIndex : ValidationError {
  using ValidationError::ValidationError;
};

struct BadProbability : ValidationError {
  using ValidationError::ValidationError;
};

struct AlphaOutOfRange : ValidationError {
  using ValidationError::ValidationError;
};

struct NoConvergence : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace qiso
