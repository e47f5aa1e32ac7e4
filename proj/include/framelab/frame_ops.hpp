#pragma once

#include <span>

#include "framelab/frame.hpp"
#include "framelab/types.hpp"

namespace framelab {

/// Weighted analysis matrix: points x dim, row i = sqrt(mu_i) * F(w_i)^*.
/// For every x, ||A x||^2 = sum_i mu_i |<x, F(w_i)>|^2.
ComplexMatrix analysis_matrix(const Frame& f);

/// Frame operator S = sum_i mu_i F(w_i) F(w_i)^*: Hermitian positive
/// semidefinite, dim x dim.
ComplexMatrix frame_operator(const Frame& f);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool optimal = false;
};

/// Optimal (best) bounds: extremal eigenvalues of the frame operator.
/// lower == 0 signals "not a frame"; no error is raised so degenerate
/// families stay inspectable.
FrameBounds optimal_bounds(const Frame& f);

struct FrameClass {
  bool is_bessel = false;
  bool is_frame = false;
  bool is_tight = false;
  bool is_parseval = false;
  bool is_exact = false;
  FrameBounds bounds;
};

/// Classification per the norm-equivalence inequality:
///   bessel: upper bound finite (always true for finite families)
///   frame:  lower > tol
///   tight:  |upper - lower| <= tol * upper
///   parseval: tight with bounds 1 within tol
///   exact: every single-point removal shrinks the span, i.e. every
///          F(w_i) stays outside the span of the rest (distance > tol).
FrameClass classify(const Frame& f, double tol = kDefaultTol);

/// Distance of each F(w_i) to the span of the other family members.
RealVector span_distances(const Frame& f);

/// General subset-removal check: does deleting the given measure points
/// shrink the span of the family? (Single-point removals are what
/// classify() aggregates; this exposes arbitrary positive-measure subsets.)
bool removal_breaks_span(const Frame& f, std::span<const Index> removed);

}  // namespace framelab
