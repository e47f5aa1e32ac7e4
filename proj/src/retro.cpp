#include "framelab/retro.hpp"

#include <algorithm>
#include <cmath>

#include "framelab/errors.hpp"
#include "framelab/numerics.hpp"

namespace framelab {

namespace {

void require_same_space(const Frame& f, const Frame& g, const char* where) {
  if (f.dim() != g.dim() || !(f.space() == g.space())) {
    throw SpaceMismatchError(std::string(where) + ": frames do not share measure space and dimension");
  }
}

void validate_subset(const Frame& f, const OmegaSubset& omega0) {
  for (const auto& label : omega0.excluded) {
    if (f.space().index_of(label) < 0) {
      throw InvariantError("omega0 label '" + label + "' is not a measure point of the frame");
    }
  }
}

template <class Scalar>
DenseMatrix<Scalar> field_matrix(const Frame& f);

template <>
DenseMatrix<double> field_matrix<double>(const Frame& f) {
  return f.vectors().real();
}

template <>
DenseMatrix<Complex> field_matrix<Complex>(const Frame& f) {
  return f.vectors();
}

/// Minimal-norm solutions of the delta systems, one per constrained index.
/// The coefficient matrix is the unweighted analysis map of f (rows F(w)^*),
/// shared across all right-hand sides.
template <class Scalar>
ComplexMatrix biorth_vectors(const Frame& f, const std::vector<bool>& constrained, double tol) {
  const DenseMatrix<Scalar> vectors = field_matrix<Scalar>(f);
  const DenseMatrix<Scalar> coefficient = vectors.adjoint();  // m x n
  const Index m = f.points();
  const Index n = f.dim();
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(coefficient,
                                            Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? kRankCutoff * sigma(0) : 0.0;
  ComplexMatrix result = ComplexMatrix::Zero(n, m);
  for (Index w0 = 0; w0 < m; ++w0) {
    if (!constrained[static_cast<std::size_t>(w0)]) continue;
    DenseVector<Scalar> rhs = DenseVector<Scalar>::Zero(m);
    rhs(w0) = Scalar(1);
    DenseVector<Scalar> coeffs = svd.matrixU().adjoint() * rhs;
    for (Index i = 0; i < sigma.size(); ++i) {
      coeffs(i) = (sigma(i) > cutoff && sigma(i) > 0.0) ? coeffs(i) / Scalar(sigma(i)) : Scalar(0);
    }
    const DenseVector<Scalar> solution = svd.matrixV() * coeffs;
    const double residual = (coefficient * solution - rhs).norm();
    if (residual > tol) {
      throw InfeasibleError("min_norm_biorthogonal: delta system inconsistent at '" +
                                f.space().label(w0) + "' (index " + std::to_string(w0 + 1) +
                                "): the vector there lies in the span of the rest (residual " +
                                std::to_string(residual) + ")",
                            w0);
    }
    result.col(w0) = solution.template cast<Complex>();
  }
  return result;
}

}  // namespace

bool OmegaSubset::contains(const std::string& label) const {
  return std::find(excluded.begin(), excluded.end(), label) != excluded.end();
}

BiorthReport check_biorthogonality(const Frame& f, const Frame& g, const OmegaSubset& omega0,
                                   double tol) {
  require_same_space(f, g, "check_biorthogonality");
  validate_subset(f, omega0);
  const Index m = f.points();
  // gram(c, r) = <G(w_r), F(w_c)>
  const ComplexMatrix gram = f.vectors().adjoint() * g.vectors();
  BiorthReport report;
  for (Index r = 0; r < m; ++r) {
    if (omega0.contains(f.space().label(r))) continue;
    report.row_labels.push_back(f.space().label(r));
  }
  report.residuals.resize(static_cast<Index>(report.row_labels.size()), m);
  Index row = 0;
  for (Index r = 0; r < m; ++r) {
    if (omega0.contains(f.space().label(r))) continue;
    for (Index c = 0; c < m; ++c) {
      const Complex delta = (r == c) ? Complex(1) : Complex(0);
      report.residuals(row, c) = std::abs(gram(c, r) - delta);
    }
    ++row;
  }
  report.max_residual = report.residuals.size() > 0 ? report.residuals.maxCoeff() : 0.0;
  report.holds = report.max_residual <= tol;
  return report;
}

Frame min_norm_biorthogonal(const Frame& f, const OmegaSubset& omega0, double tol) {
  validate_subset(f, omega0);
  std::vector<bool> constrained(static_cast<std::size_t>(f.points()), true);
  for (Index i = 0; i < f.points(); ++i) {
    if (omega0.contains(f.space().label(i))) constrained[static_cast<std::size_t>(i)] = false;
  }
  const ComplexMatrix vectors = f.field() == ScalarField::Real
                                    ? biorth_vectors<double>(f, constrained, tol)
                                    : biorth_vectors<Complex>(f, constrained, tol);
  return f.with_vectors(vectors);
}

RealVector exactness_profile(const Frame& f) { return span_distances(f); }

DistanceProfile distance_profile(const Frame& g, const ComplexVector& x, std::optional<Index> depth) {
  if (x.size() != g.dim()) {
    throw DimensionMismatchError("distance_profile: vector dim " + std::to_string(x.size()) +
                                 " vs frame dim " + std::to_string(g.dim()));
  }
  const Index k = depth.value_or(g.points());
  if (k < 0 || k > g.points()) {
    throw DimensionMismatchError("distance_profile: depth " + std::to_string(k) + " exceeds " +
                                 std::to_string(g.points()) + " measure points");
  }
  DistanceProfile profile;
  profile.x = x;
  profile.distances.resize(k);
  for (Index j = 0; j < k; ++j) {
    profile.distances(j) =
        numerics::distance_to_span<Complex>(x, ComplexMatrix(g.vectors().leftCols(j + 1)));
  }
  return profile;
}

AnalysisBounds analysis_lower_bound(const Frame& g) {
  const RealVector sigma = numerics::singular_values<Complex>(analysis_matrix(g));
  AnalysisBounds bounds;
  bounds.b0 = sigma(0) * sigma(0);
  // the analysis map acts on the full ambient space: with fewer points than
  // dimensions it has a kernel and the lower bound is exactly zero
  bounds.a0 = g.points() < g.dim() ? 0.0 : sigma(sigma.size() - 1) * sigma(sigma.size() - 1);
  return bounds;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::DualConfirmed:
      return "DUAL_CONFIRMED";
    case Verdict::NoDualWitness:
      return "NO_DUAL_WITNESS";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

RetroVerdict retro_dual_verdict(const Frame& f, const OmegaSubset& omega0,
                                std::optional<Frame> candidate, double tol) {
  validate_subset(f, omega0);
  Frame g = candidate.has_value() ? *std::move(candidate) : min_norm_biorthogonal(f, omega0, tol);
  require_same_space(f, g, "retro_dual_verdict");

  RetroVerdict verdict{.verdict = Verdict::Inconclusive,
                       .biorth = check_biorthogonality(f, g, omega0, tol),
                       .candidate_bounds = {},
                       .witness = {},
                       .rank_deficit = 0,
                       .truncation_dim = f.dim(),
                       .witness_profile = {},
                       .candidate = g,
                       .note = {}};
  const AnalysisBounds ab = analysis_lower_bound(g);
  verdict.candidate_bounds = FrameBounds{ab.a0, ab.b0, true};
  verdict.rank_deficit = f.dim() - numerics::numeric_rank<Complex>(g.vectors());

  if (verdict.biorth.holds && ab.a0 > tol) {
    verdict.verdict = Verdict::DualConfirmed;
    verdict.note = "analysis map of the candidate is bounded below at truncation dim " +
                   std::to_string(f.dim());
    return verdict;
  }

  // Witness search. Skipped when the family spans the whole space: the
  // biorthogonal freedom is exactly the orthogonal complement of span{F},
  // so at full rank no universal witness can exist.
  const Index rank_f = numerics::numeric_rank<Complex>(f.vectors());
  if (rank_f < f.dim()) {
    Eigen::JacobiSVD<ComplexMatrix> svd(analysis_matrix(g), Eigen::ComputeFullV);
    const ComplexVector y = svd.matrixV().col(f.dim() - 1);
    const double coefficient_residual = (g.vectors().adjoint() * y).cwiseAbs().maxCoeff();
    if (coefficient_residual <= tol) {
      verdict.witness = y;
      verdict.witness_profile = distance_profile(g, y).distances;
    }
  }

  if (verdict.biorth.holds && ab.a0 <= tol && f.points() < f.dim() && verdict.witness) {
    // Fewer measure points than dimensions: every candidate family, however
    // the free directions are chosen, leaves a nonzero vector with all-zero
    // coefficients, so the lower bound fails for every candidate.
    verdict.verdict = Verdict::NoDualWitness;
    verdict.note = "evidence at truncation dim " + std::to_string(f.dim()) + ": " +
                   std::to_string(f.points()) +
                   " measure points cannot span the space, so every biorthogonal candidate "
                   "leaves a nonzero vector with vanishing coefficients; the attached witness "
                   "certifies this for the examined candidate. Finite-truncation evidence, not "
                   "an asymptotic proof";
  } else {
    verdict.verdict = Verdict::Inconclusive;
    verdict.note = verdict.biorth.holds
                       ? "candidate analysis map is not bounded below, but other candidates may be"
                       : "biorthogonality fails for the examined candidate";
  }
  return verdict;
}

}  // namespace framelab
