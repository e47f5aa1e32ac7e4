#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "framelab/frame.hpp"
#include "framelab/frame_ops.hpp"

namespace framelab {

/// A fixed subset Omega_0 of measure points, identified by label. The
/// biorthogonality constraints are waived on these points; the empty subset
/// is the "strong" case.
struct OmegaSubset {
  std::vector<std::string> excluded;

  bool contains(const std::string& label) const;
};

struct BiorthReport {
  /// Row labels: measure points outside Omega_0, in label order.
  std::vector<std::string> row_labels;
  /// residuals(r, c) = |<G(w_r), F(w_c)> - delta_{w_r, w_c}|.
  RealMatrix residuals;
  double max_residual = 0.0;
  bool holds = false;
};

/// Biorthogonality check <G(w0), F(w)> = delta over all pairs with
/// w0 outside Omega_0. Unweighted inner products.
BiorthReport check_biorthogonality(const Frame& f, const Frame& g,
                                   const OmegaSubset& omega0 = {}, double tol = kDefaultTol);

/// Minimal-norm family G with <G(w0), F(w)> = delta_{w0,w} for w0 outside
/// Omega_0, and G(w0) = 0 on Omega_0. Throws InfeasibleError (with the
/// offending index) when some constrained F(w0) lies in the span of the
/// other family members, which makes its delta system inconsistent.
Frame min_norm_biorthogonal(const Frame& f, const OmegaSubset& omega0 = {},
                            double tol = kDefaultTol);

/// Per-index distance of F(w_i) to the span of the rest; the family is
/// exact iff every entry is positive.
RealVector exactness_profile(const Frame& f);

struct DistanceProfile {
  ComplexVector x;
  RealVector distances;  // dist(x, span{G(w_1)..G(w_k)}), k = 1..depth; nonincreasing
};

/// Distances from x to the nested spans of the leading family members, in
/// label order. depth defaults to all measure points.
DistanceProfile distance_profile(const Frame& g, const ComplexVector& x,
                                 std::optional<Index> depth = {});

struct AnalysisBounds {
  double a0 = 0.0;  // squared smallest singular value of the weighted analysis map on the full space
  double b0 = 0.0;  // squared largest singular value
};

/// Bounded-below diagnostics of the weighted analysis map y -> {<y, G(w)>}:
/// a0 > 0 certifies a positive lower bound at this truncation. With fewer
/// points than dimensions the map has a kernel and a0 is exactly 0.
AnalysisBounds analysis_lower_bound(const Frame& g);

enum class Verdict { DualConfirmed, NoDualWitness, Inconclusive };

std::string_view to_string(Verdict v);

struct RetroVerdict {
  Verdict verdict = Verdict::Inconclusive;
  BiorthReport biorth;
  FrameBounds candidate_bounds;  // (a0, b0) of the candidate family
  /// Nonzero y with <y, G(w)> ~ 0 for all w, when one exists (unit norm).
  std::optional<ComplexVector> witness;
  /// dim - rank of the candidate family.
  Index rank_deficit = 0;
  Index truncation_dim = 0;
  /// Distance profile of the witness against the candidate (evidence that
  /// the nested-span criterion fails); present whenever a witness is.
  std::optional<RealVector> witness_profile;
  Frame candidate;
  std::string note;
};

/// Combined existence verdict for a dual of f relative to Omega_0, using
/// `candidate` when supplied and the minimal-norm biorthogonal family
/// otherwise.
///
///   DUAL_CONFIRMED   biorthogonality holds and the candidate's analysis
///                    map is bounded below (a0 > tol).
///   NO_DUAL_WITNESS  biorthogonality holds, a0 <= tol, and the family has
///                    fewer points than dimensions, so EVERY candidate
///                    family leaves a nonzero vector with all-zero
///                    coefficients; the witness is attached. This is
///                    finite-truncation evidence, not an asymptotic proof.
///   INCONCLUSIVE     anything else; rank-deficit and distance-profile
///                    evidence attached when available.
RetroVerdict retro_dual_verdict(const Frame& f, const OmegaSubset& omega0 = {},
                                std::optional<Frame> candidate = {}, double tol = kDefaultTol);

}  // namespace framelab
