#pragma once

#include <stdexcept>
#include <string>

namespace elicit {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A distribution violates its construction invariants.
struct InvalidDistributionError : Error {
  using Error::Error;
};

/// Generic precondition violation on an operation argument.
struct InvalidArgumentError : Error {
  using Error::Error;
};

/// Discrete distribution has two or more atoms tied for maximum probability.
struct AmbiguousModeError : Error {
  using Error::Error;
};

/// Beta mode requested with a shape parameter <= 1.
struct UndefinedModeError : Error {
  using Error::Error;
};

/// Optimal report requested under a scheme that pays nothing; point reports
/// cannot be mapped to any feature of the belief distribution.
struct NoBestResponseError : Error {
  using Error::Error;
};

/// A window update removed every atom of a discrete prior.
struct EmptyPosteriorError : Error {
  using Error::Error;
};

/// Input data carries no information (e.g. all reports identical).
struct DegenerateDataError : Error {
  using Error::Error;
};

/// An iterative numerical routine hit its iteration cap.
struct NonConvergenceError : Error {
  using Error::Error;
};

/// Regression requested on a regressor with zero variance.
struct ZeroVarianceError : Error {
  using Error::Error;
};

}  // namespace elicit
