#include "framelab/frame.hpp"

#include <cmath>
#include <unordered_set>

#include "framelab/errors.hpp"

namespace framelab {

Frame::Frame(MeasureSpace space, ComplexMatrix vectors, ScalarField field)
    : space_(std::move(space)), vectors_(std::move(vectors)), field_(field) {
  if (vectors_.cols() != space_.size()) {
    throw InvariantError("frame has " + std::to_string(vectors_.cols()) + " vectors for " +
                         std::to_string(space_.size()) + " measure points");
  }
  if (vectors_.rows() < 1) {
    throw InvariantError("frame ambient dimension must be at least 1");
  }
  for (Index j = 0; j < vectors_.cols(); ++j) {
    for (Index i = 0; i < vectors_.rows(); ++i) {
      const Complex v = vectors_(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw InvariantError("non-finite entry in vector '" + space_.label(j) + "'");
      }
      if (field_ == ScalarField::Real && v.imag() != 0.0) {
        throw InvariantError("real frame has nonzero imaginary part in vector '" +
                             space_.label(j) + "'");
      }
    }
  }
}

Frame Frame::real(MeasureSpace space, const RealMatrix& vectors) {
  return Frame(std::move(space), vectors.cast<Complex>(), ScalarField::Real);
}

Frame Frame::with_vectors(ComplexMatrix vectors) const {
  return Frame(space_, std::move(vectors), field_);
}

Frame Frame::without_points(std::span<const Index> removed) const {
  std::unordered_set<Index> drop(removed.begin(), removed.end());
  for (const Index i : drop) {
    if (i < 0 || i >= points()) {
      throw InvariantError("without_points: index " + std::to_string(i) + " out of range");
    }
  }
  const Index kept = points() - static_cast<Index>(drop.size());
  if (kept < 1) throw InvariantError("without_points: cannot remove every measure point");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(kept));
  RealVector weights(kept);
  ComplexMatrix vectors(dim(), kept);
  Index out = 0;
  for (Index i = 0; i < points(); ++i) {
    if (drop.count(i) != 0) continue;
    labels.push_back(space_.label(i));
    weights(out) = space_.weight(i);
    vectors.col(out) = vectors_.col(i);
    ++out;
  }
  return Frame(MeasureSpace(std::move(labels), std::move(weights)), std::move(vectors), field_);
}

Frame Frame::permuted(std::span<const Index> perm) const {
  if (static_cast<Index>(perm.size()) != points()) {
    throw InvariantError("permuted: permutation size mismatch");
  }
  std::vector<std::string> labels;
  labels.reserve(perm.size());
  RealVector weights(points());
  ComplexMatrix vectors(dim(), points());
  for (Index i = 0; i < points(); ++i) {
    const Index src = perm[static_cast<std::size_t>(i)];
    if (src < 0 || src >= points()) throw InvariantError("permuted: index out of range");
    labels.push_back(space_.label(src));
    weights(i) = space_.weight(src);
    vectors.col(i) = vectors_.col(src);
  }
  return Frame(MeasureSpace(std::move(labels), std::move(weights)), std::move(vectors), field_);
}

}  // namespace framelab
