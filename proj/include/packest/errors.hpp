#pragma once

#include <stdexcept>
#include <string>

namespace packest {

// Bad user input: scenario files, schedules, parameter files.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failures: solver divergence, covariance collapse, singular
// innovations, non-convergent extrapolation.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverError : NumericalError {
  using NumericalError::NumericalError;
};

struct CovarianceError : NumericalError {
  using NumericalError::NumericalError;
};

// Distributed-filter protocol violation (missing neighbor message).
struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace packest
