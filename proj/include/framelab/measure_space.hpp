#pragma once

#include <string>
#include <vector>

#include "framelab/types.hpp"

namespace framelab {

/// Finite measure space: ordered measure-point labels with positive weights.
/// Counting measure (all weights 1) and quadrature discretizations of
/// intervals are the two ways these get built in practice.
class MeasureSpace {
 public:
  MeasureSpace(std::vector<std::string> labels, RealVector weights);

  /// Counting measure on m points labeled w1..wm.
  static MeasureSpace counting(Index m);

  Index size() const { return weights_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RealVector& weights() const { return weights_; }
  const std::string& label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }
  double weight(Index i) const { return weights_(i); }

  /// Index of a label; -1 when absent.
  Index index_of(const std::string& label) const;

  bool operator==(const MeasureSpace& other) const;

 private:
  std::vector<std::string> labels_;
  RealVector weights_;
};

struct Quadrature {
  MeasureSpace space;
  RealVector nodes;
};

/// Midpoint rule on [a, b): m nodes t_i = a + (i - 1/2)(b - a)/m, each with
/// weight (b - a)/m. Labels are t1..tm.
Quadrature uniform_quadrature(double a, double b, Index m);

}  // namespace framelab
