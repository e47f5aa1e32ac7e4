#include "framelab/measure_space.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "framelab/errors.hpp"

namespace framelab {

MeasureSpace::MeasureSpace(std::vector<std::string> labels, RealVector weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (weights_.size() == 0) {
    throw InvariantError("measure space needs at least one point");
  }
  if (static_cast<Index>(labels_.size()) != weights_.size()) {
    throw InvariantError("measure space has " + std::to_string(labels_.size()) + " labels but " +
                         std::to_string(weights_.size()) + " weights");
  }
  for (Index i = 0; i < weights_.size(); ++i) {
    if (!(weights_(i) > 0.0) || !std::isfinite(weights_(i))) {
      throw InvariantError("weight of '" + labels_[static_cast<std::size_t>(i)] +
                           "' must be positive and finite");
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw InvariantError("duplicate measure-point label '" + label + "'");
    }
  }
}

MeasureSpace MeasureSpace::counting(Index m) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) labels.push_back("w" + std::to_string(i + 1));
  return MeasureSpace(std::move(labels), RealVector::Ones(m));
}

Index MeasureSpace::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return -1;
  return static_cast<Index>(it - labels_.begin());
}

bool MeasureSpace::operator==(const MeasureSpace& other) const {
  return labels_ == other.labels_ && weights_.size() == other.weights_.size() &&
         (weights_.array() == other.weights_.array()).all();
}

Quadrature uniform_quadrature(double a, double b, Index m) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidIntervalError("uniform_quadrature: need finite a < b, got [" + std::to_string(a) +
                               ", " + std::to_string(b) + ")");
  }
  if (m < 1) throw InvalidIntervalError("uniform_quadrature: need at least one node");
  const double h = (b - a) / static_cast<double>(m);
  RealVector nodes(m);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) {
    nodes(i) = a + (static_cast<double>(i) + 0.5) * h;
    labels.push_back("t" + std::to_string(i + 1));
  }
  return Quadrature{MeasureSpace(std::move(labels), RealVector::Constant(m, h)), std::move(nodes)};
}

}  // namespace framelab
