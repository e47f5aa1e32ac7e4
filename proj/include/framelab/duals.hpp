#pragma once

#include <cstdint>
#include <vector>

#include "framelab/frame.hpp"
#include "framelab/frame_ops.hpp"

namespace framelab {

struct DualPairReport {
  /// max over standard basis vectors e_j of || sum_i mu_i <e_j, G_i> F_i - e_j ||.
  double reconstruction_residual = 0.0;
  FrameBounds g_bounds;
  bool is_dual = false;
};

/// Canonical dual {S^-1 F(w_i)} on the same measure space. Throws
/// NotAFrameError when the lower optimal bound is <= tol.
Frame canonical_dual(const Frame& f, double tol = kDefaultTol);

/// Checks the reconstruction identity x = sum_i mu_i <x, G_i> F_i and that
/// g is itself a frame. Frames must share measure space and dimension.
DualPairReport verify_hilbert_dual(const Frame& f, const Frame& g, double tol = kDefaultTol);

struct DualFamily {
  std::vector<Frame> duals;  // first entry is the canonical dual
  bool canonical_only = false;  // true iff f is exact (trivial synthesis null space)
};

/// Up to `count` distinct verified duals: the canonical dual plus seeded
/// Gaussian perturbations drawn from the null space of the weighted
/// synthesis map. Exact frames admit only the canonical dual; in that case
/// the list has length one and canonical_only is set.
DualFamily alternate_duals(const Frame& f, Index count, std::uint64_t seed,
                           double magnitude = 1.0, double tol = kDefaultTol);

}  // namespace framelab
