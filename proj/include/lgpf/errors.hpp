#pragma once

#include <stdexcept>
#include <string>

namespace lgpf {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix required to be symmetric positive definite is not. The message
// names the offending matrix and, when applicable, the grid time.
struct NonPositiveDefinite : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// A linear solve against a numerically singular matrix.
struct SingularMatrix : Error {
  using Error::Error;
};

// The Riccati covariance developed an eigenvalue below -1e-10; the step size
// is too coarse for the model.
struct LostPositivity : Error {
  using Error::Error;
};

struct InvalidCount : Error {
  using Error::Error;
};

// The (regularized) ensemble sample covariance cannot be inverted, or the
// particle count makes it structurally singular.
struct SingularEmpiricalCovariance : Error {
  using Error::Error;
};

// A time or a path length does not line up with the grid.
struct GridMismatch : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace lgpf
