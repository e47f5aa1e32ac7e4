#pragma once

// Shared generators and helpers for the test suites. Everything is seeded,
// so every run sees the same sample set.

#include <random>

#include "framelab/duals.hpp"
#include "framelab/frame.hpp"
#include "framelab/frame_ops.hpp"
#include "framelab/random.hpp"
#include "framelab/types.hpp"

namespace testsupport {

using namespace framelab;

inline ComplexMatrix random_matrix(std::mt19937_64& gen, Index rows, Index cols,
                                   ScalarField field) {
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      m(i, j) = field == ScalarField::Real ? Complex(rng::gaussian(gen), 0.0)
                                           : rng::gaussian_complex(gen);
    }
  }
  return m;
}

inline ComplexVector random_unit_vector(std::mt19937_64& gen, Index dim,
                                        ScalarField field = ScalarField::Complex) {
  while (true) {
    ComplexVector v = random_matrix(gen, dim, 1, field);
    const double norm = v.norm();
    if (norm > 1e-6) return v / norm;
  }
}

inline RealVector random_weights(std::mt19937_64& gen, Index m) {
  RealVector w(m);
  for (Index i = 0; i < m; ++i) {
    // log-uniform over [0.1, 10]
    w(i) = 0.1 * std::pow(100.0, rng::uniform01(gen));
  }
  return w;
}

inline Index random_index(std::mt19937_64& gen, Index lo, Index hi) {
  return lo + static_cast<Index>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Arbitrary vector family (no spanning guarantee).
inline Frame random_family(std::mt19937_64& gen, Index dim, Index points, ScalarField field) {
  MeasureSpace space(MeasureSpace::counting(points).labels(), random_weights(gen, points));
  return Frame(std::move(space), random_matrix(gen, dim, points, field), field);
}

/// A genuine frame: at least dim points, conditioned so double-precision
/// tolerances hold (lambda_min >= lambda_max / cond_cap).
inline Frame random_frame(std::mt19937_64& gen, Index max_dim, Index max_points, ScalarField field,
                          double cond_cap = 1e4) {
  while (true) {
    const Index dim = random_index(gen, 1, max_dim);
    const Index points = random_index(gen, dim, std::max(dim, max_points));
    Frame f = random_family(gen, dim, points, field);
    const FrameBounds bounds = optimal_bounds(f);
    if (bounds.lower * cond_cap > bounds.upper) return f;
  }
}

inline ScalarField random_field(std::mt19937_64& gen) {
  return (gen() & 1u) == 0 ? ScalarField::Real : ScalarField::Complex;
}

inline double max_entry_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline bool bitwise_equal(const Frame& a, const Frame& b) {
  if (a.dim() != b.dim() || a.points() != b.points() || a.field() != b.field()) return false;
  if (!(a.space() == b.space())) return false;
  for (Index j = 0; j < a.points(); ++j) {
    for (Index i = 0; i < a.dim(); ++i) {
      if (a.vectors()(i, j) != b.vectors()(i, j)) return false;
    }
  }
  return true;
}

}  // namespace testsupport
