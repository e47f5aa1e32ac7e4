#pragma once

// Dense linear-algebra kernel used by every higher layer. Free functions on
// Eigen dense types, templated on scalar (double or std::complex<double>).
// No frame semantics here.

#include <Eigen/Dense>

#include <vector>

#include "framelab/errors.hpp"
#include "framelab/types.hpp"

namespace framelab::numerics {

/// Ascending real eigenvalues of a Hermitian matrix.
/// Rejects non-square input and input whose entrywise deviation from its
/// adjoint exceeds kHermitianTol.
template <class Scalar>
RealVector hermitian_eigenvalues(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) {
    throw NotSquareError("hermitian_eigenvalues: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  if (m.size() == 0) throw EmptyMatrixError("hermitian_eigenvalues: empty matrix");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    throw NotHermitianError("hermitian_eigenvalues: max |m - m*| = " + std::to_string(asym));
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Descending singular values; count = min(rows, cols).
template <class Scalar>
RealVector singular_values(const DenseMatrix<Scalar>& m) {
  if (m.size() == 0) throw EmptyMatrixError("singular_values: empty matrix");
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(m);
  return svd.singularValues();
}

/// Numeric rank with the relative cutoff sigma <= cutoff * sigma_max.
template <class Scalar>
Index numeric_rank(const DenseMatrix<Scalar>& m, double cutoff = kRankCutoff) {
  if (m.size() == 0) return 0;
  const RealVector sigma = singular_values<Scalar>(m);
  const double threshold = cutoff * sigma(0);
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold && sigma(i) > 0.0) ++rank;
  }
  return rank;
}

/// Distance from x to the linear span of the columns of `basis`.
/// The basis may be empty (distance = ||x||) or linearly dependent;
/// degeneracy is absorbed by the singular-value cutoff.
template <class Scalar>
double distance_to_span(const DenseVector<Scalar>& x, const DenseMatrix<Scalar>& basis) {
  if (basis.cols() == 0) return x.norm();
  if (basis.rows() != x.size()) {
    throw DimensionMismatchError("distance_to_span: basis rows " + std::to_string(basis.rows()) +
                                 " vs vector dim " + std::to_string(x.size()));
  }
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(basis, Eigen::ComputeThinU);
  const RealVector sigma = svd.singularValues();
  const double threshold = sigma.size() > 0 ? kRankCutoff * sigma(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold && sigma(i) > 0.0) ++rank;
  }
  if (rank == 0) return x.norm();
  const auto q = svd.matrixU().leftCols(rank);
  const DenseVector<Scalar> residual = x - q * (q.adjoint() * x);
  return residual.norm();
}

template <class Scalar>
double distance_to_span(const DenseVector<Scalar>& x, const std::vector<DenseVector<Scalar>>& basis) {
  DenseMatrix<Scalar> b(x.size(), static_cast<Index>(basis.size()));
  for (Index j = 0; j < b.cols(); ++j) {
    if (basis[static_cast<std::size_t>(j)].size() != x.size()) {
      throw DimensionMismatchError("distance_to_span: basis vector " + std::to_string(j) +
                                   " has dim " +
                                   std::to_string(basis[static_cast<std::size_t>(j)].size()) +
                                   ", expected " + std::to_string(x.size()));
    }
    b.col(j) = basis[static_cast<std::size_t>(j)];
  }
  return distance_to_span<Scalar>(x, b);
}

template <class Scalar>
struct LeastSquares {
  DenseVector<Scalar> solution;  // minimal-norm minimizer of ||a x - b||
  double residual;               // ||a x - b|| at the solution
};

/// Minimal-Euclidean-norm least-squares solution (pseudoinverse solve).
template <class Scalar>
LeastSquares<Scalar> min_norm_solve(const DenseMatrix<Scalar>& a, const DenseVector<Scalar>& b) {
  if (a.rows() != b.size()) {
    throw DimensionMismatchError("min_norm_solve: " + std::to_string(a.rows()) + " rows vs rhs dim " +
                                 std::to_string(b.size()));
  }
  if (a.size() == 0) throw EmptyMatrixError("min_norm_solve: empty matrix");
  Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector sigma = svd.singularValues();
  const double threshold = sigma.size() > 0 ? kRankCutoff * sigma(0) : 0.0;
  DenseVector<Scalar> coeffs = svd.matrixU().adjoint() * b;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold && sigma(i) > 0.0) {
      coeffs(i) /= sigma(i);
    } else {
      coeffs(i) = Scalar(0);
    }
  }
  LeastSquares<Scalar> out;
  out.solution = svd.matrixV() * coeffs;
  out.residual = (a * out.solution - b).norm();
  return out;
}

}  // namespace framelab::numerics
