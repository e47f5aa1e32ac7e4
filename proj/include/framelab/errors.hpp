#pragma once

#include <stdexcept>
#include <string>

#include "framelab/types.hpp"

namespace framelab {

/// Base class for all framelab errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSquareError : Error {
  using Error::Error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

struct EmptyMatrixError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

/// Two frames do not share the same measure space or ambient dimension.
struct SpaceMismatchError : Error {
  using Error::Error;
};

/// Lower optimal bound is (numerically) zero where a frame is required.
struct NotAFrameError : Error {
  using Error::Error;
};

/// The delta system of a biorthogonal construction is inconsistent.
/// Carries the first offending measure-point index (the vector there lies
/// in the span of the remaining family).
struct InfeasibleError : Error {
  InfeasibleError(const std::string& what, Index offending)
      : Error(what), offending_index(offending) {}
  Index offending_index;
};

struct InvalidIntervalError : Error {
  using Error::Error;
};

struct UnknownScenarioError : Error {
  using Error::Error;
};

struct BadDimensionError : Error {
  using Error::Error;
};

/// Malformed frame / measure-space file; message carries field diagnostics.
struct ParseError : Error {
  using Error::Error;
};

/// Violated construction invariant (bad weights, duplicate labels, ...).
struct InvariantError : Error {
  using Error::Error;
};

}  // namespace framelab
