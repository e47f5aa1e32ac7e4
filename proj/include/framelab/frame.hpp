#pragma once

#include <span>
#include <vector>

#include "framelab/measure_space.hpp"
#include "framelab/types.hpp"

namespace framelab {

/// A finite vector family over a measure space: one ambient vector per
/// measure point, stored as the columns of a dim x points matrix.
/// Immutable after construction.
class Frame {
 public:
  /// `vectors` has one column per measure point. Real-field frames must have
  /// exactly zero imaginary parts; all entries must be finite.
  Frame(MeasureSpace space, ComplexMatrix vectors, ScalarField field);

  static Frame real(MeasureSpace space, const RealMatrix& vectors);

  Index dim() const { return vectors_.rows(); }
  Index points() const { return vectors_.cols(); }
  const MeasureSpace& space() const { return space_; }
  const ComplexMatrix& vectors() const { return vectors_; }
  ScalarField field() const { return field_; }
  ComplexVector vector(Index i) const { return vectors_.col(i); }

  /// Same space and field, different vectors (duals, perturbations).
  Frame with_vectors(ComplexMatrix vectors) const;

  /// Sub-frame with the given point indices removed.
  Frame without_points(std::span<const Index> removed) const;

  /// Frame with measure points reordered by `perm` (a permutation of 0..m-1).
  Frame permuted(std::span<const Index> perm) const;

 private:
  MeasureSpace space_;
  ComplexMatrix vectors_;
  ScalarField field_;
};

}  // namespace framelab
