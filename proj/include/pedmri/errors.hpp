#pragma once

#include <stdexcept>
#include <string>

namespace pedmri {

// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller misuse: bad flags, invalid configuration, API preconditions.
// The CLI maps this to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Problems with the data itself: malformed files, shape mismatches,
// numerically degenerate inputs. The CLI maps this to exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public DataError {
 public:
  using DataError::DataError;
};

// Fewer than the minimum number of distinct gradient directions.
class InsufficientSamplingError : public DataError {
 public:
  using DataError::DataError;
};

// Spherical-harmonics fit with a numerically singular design matrix.
class DegenerateDirectionsError : public DataError {
 public:
  using DataError::DataError;
};

// Angular correlation requested with an all-zero l>=2 block.
class UndefinedAccError : public DataError {
 public:
  using DataError::DataError;
};

// Token sequence longer than the configured maximum.
class SequenceOverflowError : public DataError {
 public:
  using DataError::DataError;
};

// Malformed on-disk container (bad magic, truncation, size mismatch).
class FormatError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace pedmri
