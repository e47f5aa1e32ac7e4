#pragma once

#include <Eigen/Dense>

#include <complex>

namespace framelab {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealMatrix = DenseMatrix<double>;
using RealVector = DenseVector<double>;
using ComplexMatrix = DenseMatrix<Complex>;
using ComplexVector = DenseVector<Complex>;

/// Scalar field of a vector family. Internally everything is stored as
/// complex; the field tag validates input and selects the file encoding.
enum class ScalarField { Real, Complex };

// Default tolerance for classification-type predicates (is a frame, is a
// dual, biorthogonality holds). Overridable per call and via the CLI --tol.
inline constexpr double kDefaultTol = 1e-8;
// Relative singular-value cutoff for rank decisions (sigma <= cutoff * sigma_max).
inline constexpr double kRankCutoff = 1e-10;
// Entrywise tolerance for the Hermitian symmetry check.
inline constexpr double kHermitianTol = 1e-10;

/// Inner product, linear in the first argument: inner(x, y) = sum_k x_k conj(y_k).
template <class DerivedX, class DerivedY>
Complex inner(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  return y.dot(x);
}

}  // namespace framelab
