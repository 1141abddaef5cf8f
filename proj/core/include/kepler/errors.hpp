// Error taxonomy shared by all kepler modules.
#pragma once

#include <stdexcept>
#include <string>

namespace kepler {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Position magnitude fell below the collision threshold.
class SingularOriginError : public Error {
 public:
  using Error::Error;
};

/// Radial or zero-momentum initial data: angular stepping is undefined.
class DegenerateOrbitError : public Error {
 public:
  using Error::Error;
};

/// Initial drift |h0 p0 / m| is not smaller than the auxiliary radius.
class StepTooLargeError : public Error {
 public:
  using Error::Error;
};

/// Adaptive-step denominator collapsed; trajectory passed too close to
/// the center for the chosen angular increment.
class StepCollapseError : public Error {
 public:
  using Error::Error;
};

/// Generic precondition violation (invalid argument ranges and the like).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver hit its cap without reaching the tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Scenario or config-file validation failure; message names the field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File or stream I/O failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A plot was requested of a metric whose reference is degenerate.
class EmptyMetricError : public Error {
 public:
  using Error::Error;
};

/// One or more scenarios of a comparison failed; message lists them all.
class ComparisonError : public Error {
 public:
  using Error::Error;
};

}  // namespace kepler
