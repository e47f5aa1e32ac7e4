// Acceptance suite. One test case per criterion; each prints a single
// PASS/FAIL line with the criterion number so the run reads as a checklist.

#include <doctest.h>

#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <vector>

#include "framelab/duals.hpp"
#include "framelab/errors.hpp"
#include "framelab/numerics.hpp"
#include "framelab/retro.hpp"
#include "support.hpp"

using namespace framelab;
using namespace testsupport;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> failures;

  Criterion(int num, std::string text) : number(num), title(std::move(text)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  ~Criterion() {
    const bool ok = failures.empty();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "\n";
    for (const auto& f : failures) std::cout << "        " << f << "\n";
    CHECK_MESSAGE(ok, "criterion ", number, " failed: ", failures.empty() ? "" : failures.front());
  }
};

Frame repeated_first_family(Index n) {
  RealMatrix vectors = RealMatrix::Zero(n - 1, n);
  vectors(0, 0) = 1.0;
  vectors(0, 1) = 1.0;
  for (Index j = 2; j < n; ++j) vectors(j - 1, j) = 1.0;
  return Frame::real(MeasureSpace::counting(n), vectors);
}

Frame shifted_plus_first_family(Index n) {
  RealMatrix vectors = RealMatrix::Zero(n, n - 1);
  for (Index j = 0; j < n - 1; ++j) {
    vectors(0, j) = 1.0;
    vectors(j + 1, j) = 1.0;
  }
  return Frame::real(MeasureSpace::counting(n - 1), vectors);
}

Frame shifted_basis_candidate(Index n) {
  RealMatrix vectors = RealMatrix::Zero(n, n - 1);
  for (Index j = 0; j < n - 1; ++j) vectors(j + 1, j) = 1.0;
  return Frame::real(MeasureSpace::counting(n - 1), vectors);
}

Frame quadratic_diagonal_family(Index n) {
  RealMatrix vectors = RealMatrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    const double w = static_cast<double>(j + 1);
    vectors(j, j) = w * w;
  }
  return Frame::real(MeasureSpace::counting(n), vectors);
}

std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

}  // namespace

TEST_CASE("criterion 1") {
  Criterion c(1, "repeated-first family at n = 8: bounds, canonical dual, verified duals");
  const Index n = 8;
  const Frame family = repeated_first_family(n);

  const FrameBounds bounds = optimal_bounds(family);
  c.expect(std::abs(bounds.lower - 1.0) <= 1e-10, "lower bound " + fmt(bounds.lower) + " != 1");
  c.expect(std::abs(bounds.upper - 2.0) <= 1e-10, "upper bound " + fmt(bounds.upper) + " != 2");

  RealMatrix expected_dual = RealMatrix::Zero(n - 1, n);
  expected_dual(0, 0) = 0.5;
  expected_dual(0, 1) = 0.5;
  for (Index j = 2; j < n; ++j) expected_dual(j - 1, j) = 1.0;
  const double dual_dev =
      max_entry_deviation(canonical_dual(family).vectors(), expected_dual.cast<Complex>());
  c.expect(dual_dev <= 1e-10, "canonical dual deviates by " + fmt(dual_dev));

  RealMatrix zero_padded = RealMatrix::Zero(n - 1, n);
  for (Index j = 1; j < n; ++j) zero_padded(j - 1, j) = 1.0;
  RealMatrix split = zero_padded;  // same tail, first coefficient split 1/3 + 2/3
  split(0, 0) = 1.0 / 3.0;
  split(0, 1) = 2.0 / 3.0;
  for (const RealMatrix& dual_vectors : {zero_padded, split}) {
    const DualPairReport report =
        verify_hilbert_dual(family, family.with_vectors(dual_vectors.cast<Complex>()));
    c.expect(report.is_dual && report.reconstruction_residual < 1e-10,
             "listed dual fails verification (residual " + fmt(report.reconstruction_residual) + ")");
  }

  const DualFamily alternates = alternate_duals(family, 4, 2024);
  Index distinct_verified = 0;
  for (std::size_t i = 0; i < alternates.duals.size(); ++i) {
    if (!verify_hilbert_dual(family, alternates.duals[i]).is_dual) continue;
    bool distinct = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (max_entry_deviation(alternates.duals[i].vectors(), alternates.duals[j].vectors()) <= 1e-9) {
        distinct = false;
      }
    }
    if (distinct) ++distinct_verified;
  }
  c.expect(distinct_verified >= 3,
           "only " + std::to_string(distinct_verified) + " distinct verified duals");
}

TEST_CASE("criterion 2") {
  Criterion c(2, "orthonormal basis: Parseval, exact, dual confirmed");
  const Frame basis = Frame::real(MeasureSpace::counting(5), RealMatrix::Identity(5, 5));
  const FrameClass cls = classify(basis);
  c.expect(std::abs(cls.bounds.lower - 1.0) <= 1e-12 && std::abs(cls.bounds.upper - 1.0) <= 1e-12,
           "bounds (" + fmt(cls.bounds.lower) + ", " + fmt(cls.bounds.upper) + ") != (1, 1)");
  c.expect(cls.is_parseval, "not classified Parseval");
  c.expect(cls.is_exact, "not classified exact");
  c.expect(retro_dual_verdict(basis).verdict == Verdict::DualConfirmed,
           "verdict is not DUAL_CONFIRMED");
}

TEST_CASE("criterion 3") {
  Criterion c(3, "shifted-plus-first family at n in {5, 6, 10}: exact but no retro dual");
  for (const Index n : {Index(5), Index(6), Index(10)}) {
    const std::string tag = " (n = " + std::to_string(n) + ")";
    const Frame family = shifted_plus_first_family(n);

    const RealVector profile = exactness_profile(family);
    c.expect(profile.minCoeff() > 0.5, "exactness profile min " + fmt(profile.minCoeff()) + tag);

    Frame candidate = min_norm_biorthogonal(family);
    const double residual = check_biorthogonality(family, candidate).max_residual;
    c.expect(residual < 1e-10, "biorthogonality residual " + fmt(residual) + tag);

    const double a0 = analysis_lower_bound(candidate).a0;
    c.expect(a0 < 1e-12, "candidate a0 " + fmt(a0) + tag);

    const RetroVerdict verdict = retro_dual_verdict(family);
    c.expect(verdict.verdict == Verdict::NoDualWitness, "verdict not NO_DUAL_WITNESS" + tag);
    if (verdict.witness) {
      const double coeff =
          (verdict.candidate.vectors().adjoint() * *verdict.witness).cwiseAbs().maxCoeff();
      c.expect(coeff < 1e-10, "witness coefficient " + fmt(coeff) + tag);
    } else {
      c.expect(false, "witness missing" + tag);
    }

    ComplexVector chi1 = ComplexVector::Zero(n);
    chi1(0) = Complex(1.0);
    const DistanceProfile flat = distance_profile(shifted_basis_candidate(n), chi1);
    c.expect((flat.distances.array() - 1.0).abs().maxCoeff() <= 1e-12,
             "distance profile of chi_1 is not constant 1" + tag);
    bool nonincreasing = true;
    for (Index i = 1; i < flat.distances.size(); ++i) {
      if (flat.distances(i) > flat.distances(i - 1) + 1e-12) nonincreasing = false;
    }
    c.expect(nonincreasing, "distance profile decreased" + tag);
  }
}

TEST_CASE("criterion 4") {
  Criterion c(4, "diagonal growth family at n in {4, 8, 16}: confirmed dual with a0 = n^-4");
  double previous = 1.0;
  for (const Index n : {Index(4), Index(8), Index(16)}) {
    const std::string tag = " (n = " + std::to_string(n) + ")";
    const Frame family = quadratic_diagonal_family(n);
    const Frame candidate = min_norm_biorthogonal(family);
    const double residual = check_biorthogonality(family, candidate).max_residual;
    c.expect(residual < 1e-12, "biorthogonality residual " + fmt(residual) + tag);

    const RetroVerdict verdict = retro_dual_verdict(family);
    c.expect(verdict.verdict == Verdict::DualConfirmed, "verdict not DUAL_CONFIRMED" + tag);

    const double a0 = analysis_lower_bound(candidate).a0;
    const double expected = std::pow(static_cast<double>(n), -4.0);
    c.expect(std::abs(a0 - expected) <= 1e-10 * expected,
             "a0 " + fmt(a0) + " != " + fmt(expected) + tag);
    c.expect(a0 < previous, "a0 not strictly decreasing" + tag);
    previous = a0;
  }
}

TEST_CASE("criterion 5") {
  Criterion c(5, "canonical dual reciprocity over 200 random frames");
  std::mt19937_64 gen(501);
  for (int trial = 0; trial < 200; ++trial) {
    const Frame f = random_frame(gen, 6, 12, random_field(gen));
    const FrameBounds bounds = optimal_bounds(f);
    const Frame dual = canonical_dual(f);
    const FrameBounds dual_bounds = optimal_bounds(dual);

    const double lower_err = std::abs(dual_bounds.lower - 1.0 / bounds.upper) * bounds.upper;
    const double upper_err = std::abs(dual_bounds.upper - 1.0 / bounds.lower) * bounds.lower;
    if (lower_err > 1e-8 || upper_err > 1e-8) {
      c.expect(false, "reciprocal bounds off by " + fmt(std::max(lower_err, upper_err)) +
                          " (trial " + std::to_string(trial) + ")");
      break;
    }

    const double scale = std::max(1.0, f.vectors().cwiseAbs().maxCoeff());
    const double ddual = max_entry_deviation(canonical_dual(dual).vectors(), f.vectors());
    if (ddual > 1e-8 * scale) {
      c.expect(false, "double dual off by " + fmt(ddual) + " (trial " + std::to_string(trial) + ")");
      break;
    }

    const double residual = verify_hilbert_dual(f, dual).reconstruction_residual;
    if (residual >= 1e-10) {
      c.expect(false, "reconstruction residual " + fmt(residual) + " (trial " +
                          std::to_string(trial) + ")");
      break;
    }
  }
}

TEST_CASE("criterion 6") {
  Criterion c(6, "distance-profile monotonicity over 500 random pairs");
  std::mt19937_64 gen(601);
  for (int trial = 0; trial < 500; ++trial) {
    const Index dim = random_index(gen, 1, 8);
    const Index points = random_index(gen, 1, 12);
    const ScalarField field = random_field(gen);
    const Frame g = random_family(gen, dim, points, field);
    ComplexVector x;
    if ((gen() & 1u) == 0) {
      x = g.vectors() * random_matrix(gen, points, 1, field);
    } else {
      x = random_unit_vector(gen, dim, field);
    }

    const DistanceProfile profile = distance_profile(g, x);
    for (Index i = 1; i < profile.distances.size(); ++i) {
      if (profile.distances(i) > profile.distances(i - 1) + 1e-12) {
        c.expect(false, "profile increased at step " + std::to_string(i) + " (trial " +
                            std::to_string(trial) + ")");
      }
    }

    ComplexMatrix extended(dim, points + 1);
    extended.leftCols(points) = g.vectors();
    extended.col(points) = x;
    const bool in_span =
        numerics::numeric_rank<Complex>(extended) == numerics::numeric_rank<Complex>(g.vectors());
    const bool final_zero = profile.distances(profile.distances.size() - 1) <= 1e-10;
    if (final_zero != in_span) {
      c.expect(false, "final value / span rank check disagree (trial " + std::to_string(trial) + ")");
    }
  }
}

TEST_CASE("criterion 7") {
  Criterion c(7, "sampled norm equivalence stays inside the spectral bounds, extremes approach them");
  std::mt19937_64 gen(701);
  constexpr Index kSamples = 100000;
  for (int trial = 0; trial < 100; ++trial) {
    // keep the unit sphere at most 5-dimensional (real dim 6, complex dim 3)
    // so 1e5 samples reliably reach within 5% of isolated extremal values
    const ScalarField field = random_field(gen);
    const Index max_dim = field == ScalarField::Real ? 6 : 3;
    const Frame f = random_frame(gen, max_dim, 12, field);
    const FrameBounds bounds = optimal_bounds(f);
    const ComplexMatrix analysis = analysis_matrix(f);

    ComplexMatrix x = random_matrix(gen, f.dim(), kSamples, f.field());
    const RealVector inv_norms = x.colwise().norm().cwiseInverse().transpose();
    x = x * inv_norms.cast<Complex>().asDiagonal();
    const RealVector quotients = (analysis * x).colwise().squaredNorm().transpose();

    const double sample_min = quotients.minCoeff();
    const double sample_max = quotients.maxCoeff();
    if (sample_min < bounds.lower - 1e-8 || sample_max > bounds.upper + 1e-8) {
      c.expect(false, "sampled quotient escapes [lambda_min, lambda_max] (trial " +
                          std::to_string(trial) + ")");
      break;
    }
    // extremes within 5% of the spectral scale
    const double tolerance = 0.05 * bounds.upper;
    if (sample_min - bounds.lower > tolerance || bounds.upper - sample_max > tolerance) {
      c.expect(false, "sampled extremes miss the bounds by more than 5% (trial " +
                          std::to_string(trial) + ", min gap " + fmt(sample_min - bounds.lower) +
                          ", max gap " + fmt(bounds.upper - sample_max) + ")");
      break;
    }
  }
}

TEST_CASE("criterion 8") {
  Criterion c(8, "circle frame under 16-node quadrature: tight with bounds (pi, pi)");
  const Quadrature quad = uniform_quadrature(0.0, 2.0 * std::numbers::pi, 16);
  RealMatrix vectors(2, 16);
  for (Index j = 0; j < 16; ++j) {
    vectors(0, j) = std::cos(quad.nodes(j));
    vectors(1, j) = std::sin(quad.nodes(j));
  }
  const Frame circle(quad.space, vectors.cast<Complex>(), ScalarField::Real);
  const FrameClass cls = classify(circle);
  c.expect(std::abs(cls.bounds.lower - std::numbers::pi) <= 1e-12,
           "lower bound " + fmt(cls.bounds.lower) + " != pi");
  c.expect(std::abs(cls.bounds.upper - std::numbers::pi) <= 1e-12,
           "upper bound " + fmt(cls.bounds.upper) + " != pi");
  c.expect(cls.is_tight, "not classified tight");
  c.expect(!cls.is_parseval, "wrongly classified Parseval");
}

TEST_CASE("criterion 9") {
  Criterion c(9, "biorthogonal feasibility coincides with exactness over 200 random families");
  std::mt19937_64 gen(901);
  for (int trial = 0; trial < 200; ++trial) {
    const Index dim = random_index(gen, 1, 6);
    const Index points = random_index(gen, 1, 12);
    Frame f = random_family(gen, dim, points, random_field(gen));
    if (trial % 4 == 0 && points >= 2) {
      ComplexMatrix vectors = f.vectors();
      vectors.col(points - 1) = vectors.col(0);  // force a dependency
      f = f.with_vectors(vectors);
    }

    bool feasible = true;
    try {
      (void)min_norm_biorthogonal(f);
    } catch (const InfeasibleError&) {
      feasible = false;
    }
    const bool all_positive = (exactness_profile(f).array() > kDefaultTol).all();
    if (feasible != all_positive) {
      c.expect(false, "feasibility and exactness disagree (trial " + std::to_string(trial) +
                          ", feasible " + std::to_string(feasible) + ")");
    }
  }
}
