#pragma once

// Seeded sampling helpers. Box-Muller on top of mt19937_64 rather than
// std::normal_distribution, so identical seeds give identical streams on
// every standard library.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "framelab/types.hpp"

namespace framelab::rng {

inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& gen) {
  double u = 0.0;
  do {
    u = uniform01(gen);
  } while (u <= 0.0);
  const double v = uniform01(gen);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

inline Complex gaussian_complex(std::mt19937_64& gen) {
  // variance 1 in total, split evenly across the parts
  const double s = std::numbers::sqrt2 / 2.0;
  return {s * gaussian(gen), s * gaussian(gen)};
}

}  // namespace framelab::rng
