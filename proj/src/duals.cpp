#include "framelab/duals.hpp"

#include <random>

#include "framelab/errors.hpp"
#include "framelab/numerics.hpp"
#include "framelab/random.hpp"

namespace framelab {

namespace {

// Real frames go through real arithmetic so results stay exactly real.
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

template <class Scalar>
ComplexMatrix to_complex(const DenseMatrix<Scalar>& m) {
  return m.template cast<Complex>();
}

template <class Scalar>
ComplexMatrix dual_vectors(const Frame& f) {
  const DenseMatrix<Scalar> vectors = field_matrix<Scalar>(f);
  const DenseMatrix<Scalar> op =
      vectors * f.space().weights().template cast<Scalar>().asDiagonal() * vectors.adjoint();
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(
      DenseMatrix<Scalar>((op + op.adjoint()) / 2.0));
  const RealVector eigs = solver.eigenvalues();
  DenseVector<Scalar> inverted(eigs.size());
  for (Index i = 0; i < eigs.size(); ++i) inverted(i) = Scalar(1.0 / eigs(i));
  return to_complex<Scalar>(solver.eigenvectors() * inverted.asDiagonal() *
                            solver.eigenvectors().adjoint() * vectors);
}

/// Orthonormal basis of the null space of the weighted synthesis map
/// c -> sum_i mu_i c_i F(w_i); empty for exact frames.
template <class Scalar>
DenseMatrix<Scalar> synthesis_null_basis(const Frame& f) {
  const DenseMatrix<Scalar> weighted =
      field_matrix<Scalar>(f) * f.space().weights().template cast<Scalar>().asDiagonal();
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(weighted, Eigen::ComputeFullV);
  const RealVector sigma = svd.singularValues();
  const double threshold = sigma.size() > 0 ? kRankCutoff * sigma(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold && sigma(i) > 0.0) ++rank;
  }
  return svd.matrixV().rightCols(f.points() - rank);
}

double draw(std::mt19937_64& gen, double* /*tag*/) { return rng::gaussian(gen); }
Complex draw(std::mt19937_64& gen, Complex* /*tag*/) { return rng::gaussian_complex(gen); }

template <class Scalar>
DualFamily make_duals(const Frame& f, const Frame& canonical, Index count, std::uint64_t seed,
                      double magnitude) {
  const DenseMatrix<Scalar> null_basis = synthesis_null_basis<Scalar>(f);
  DualFamily family;
  family.canonical_only = null_basis.cols() == 0;
  if (count <= 0) return family;
  family.duals.push_back(canonical);
  if (family.canonical_only) return family;
  std::mt19937_64 gen(seed);
  for (Index k = 1; k < count; ++k) {
    DenseMatrix<Scalar> coeffs(null_basis.cols(), f.dim());
    for (Index j = 0; j < coeffs.cols(); ++j) {
      for (Index i = 0; i < coeffs.rows(); ++i) {
        coeffs(i, j) = Scalar(magnitude) * draw(gen, static_cast<Scalar*>(nullptr));
      }
    }
    // columns of (null_basis * coeffs)^* are per-point perturbations h_i with
    // sum_i mu_i <x, h_i> F(w_i) = 0 for every x
    const ComplexMatrix perturbation = to_complex<Scalar>((null_basis * coeffs).adjoint());
    family.duals.push_back(f.with_vectors(canonical.vectors() + perturbation));
  }
  return family;
}

}  // namespace

Frame canonical_dual(const Frame& f, double tol) {
  const FrameBounds bounds = optimal_bounds(f);
  if (!(bounds.lower > tol)) {
    throw NotAFrameError("canonical_dual: lower optimal bound " + std::to_string(bounds.lower) +
                         " is not above tol");
  }
  if (f.field() == ScalarField::Real) return f.with_vectors(dual_vectors<double>(f));
  return f.with_vectors(dual_vectors<Complex>(f));
}

DualPairReport verify_hilbert_dual(const Frame& f, const Frame& g, double tol) {
  if (f.dim() != g.dim() || !(f.space() == g.space())) {
    throw SpaceMismatchError("verify_hilbert_dual: frames do not share measure space and dimension");
  }
  const ComplexMatrix composition =
      f.vectors() * f.space().weights().cast<Complex>().asDiagonal() * g.vectors().adjoint();
  const ComplexMatrix deviation = composition - ComplexMatrix::Identity(f.dim(), f.dim());
  DualPairReport report;
  report.reconstruction_residual = deviation.colwise().norm().maxCoeff();
  report.g_bounds = optimal_bounds(g);
  report.is_dual = report.reconstruction_residual <= tol && report.g_bounds.lower > tol;
  return report;
}

DualFamily alternate_duals(const Frame& f, Index count, std::uint64_t seed, double magnitude,
                           double tol) {
  const Frame canonical = canonical_dual(f, tol);
  if (f.field() == ScalarField::Real) {
    return make_duals<double>(f, canonical, count, seed, magnitude);
  }
  return make_duals<Complex>(f, canonical, count, seed, magnitude);
}

}  // namespace framelab
