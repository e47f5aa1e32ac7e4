#include "framelab/frame_ops.hpp"

#include <cmath>
#include <vector>

#include "framelab/numerics.hpp"

namespace framelab {

ComplexMatrix analysis_matrix(const Frame& f) {
  const RealVector root_weights = f.space().weights().cwiseSqrt();
  return root_weights.cast<Complex>().asDiagonal() * f.vectors().adjoint();
}

ComplexMatrix frame_operator(const Frame& f) {
  const ComplexMatrix weighted =
      f.vectors() * f.space().weights().cast<Complex>().asDiagonal() * f.vectors().adjoint();
  // symmetrize away the last-bit asymmetry of the triple product
  return (weighted + weighted.adjoint()) / 2.0;
}

FrameBounds optimal_bounds(const Frame& f) {
  const RealVector eigs = numerics::hermitian_eigenvalues<Complex>(frame_operator(f));
  FrameBounds bounds;
  bounds.lower = std::max(eigs(0), 0.0);  // clamp eigensolver noise on singular families
  bounds.upper = std::max(eigs(eigs.size() - 1), 0.0);
  bounds.optimal = true;
  return bounds;
}

RealVector span_distances(const Frame& f) {
  const Index m = f.points();
  RealVector distances(m);
  for (Index i = 0; i < m; ++i) {
    ComplexMatrix others(f.dim(), m - 1);
    Index out = 0;
    for (Index j = 0; j < m; ++j) {
      if (j == i) continue;
      others.col(out++) = f.vectors().col(j);
    }
    distances(i) = numerics::distance_to_span<Complex>(ComplexVector(f.vectors().col(i)), others);
  }
  return distances;
}

FrameClass classify(const Frame& f, double tol) {
  FrameClass cls;
  cls.bounds = optimal_bounds(f);
  cls.is_bessel = std::isfinite(cls.bounds.upper);
  cls.is_frame = cls.bounds.lower > tol;
  cls.is_tight = cls.is_frame && (cls.bounds.upper - cls.bounds.lower) <= tol * cls.bounds.upper;
  cls.is_parseval = cls.is_tight && std::abs(cls.bounds.lower - 1.0) <= tol &&
                    std::abs(cls.bounds.upper - 1.0) <= tol;
  cls.is_exact = (span_distances(f).array() > tol).all();
  return cls;
}

bool removal_breaks_span(const Frame& f, std::span<const Index> removed) {
  if (removed.empty()) return false;
  const Index full_rank = numerics::numeric_rank<Complex>(f.vectors());
  const Frame reduced = f.without_points(removed);
  return numerics::numeric_rank<Complex>(reduced.vectors()) < full_rank;
}

}  // namespace framelab
