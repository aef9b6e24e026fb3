#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qecon/distributions.hpp"

namespace qecon {

// Extended FAST: variance-based first- and total-order sensitivity indices.
// Each factor in turn is driven at the high frequency omega_max along a sine
// search curve through its inverse CDF while the complementary factors move
// at low frequencies; the output spectrum at the harmonics of omega_max
// gives the first-order index, the low-frequency band the total-order
// complement. Random phase shifts, re-drawn per resample, are keyed by
// factor name so results do not depend on declaration order.

struct EfastFactor {
  std::string name;
  FactorDistribution distribution;
};

struct EfastPlan {
  std::vector<EfastFactor> factors;
  int samples_per_curve = 1025;  // odd; >= 4 * interference * omega_max + 1
  int resamples = 2;
  int interference = 4;  // highest harmonic of omega_max that is read off

  /// Frequency for the factor of interest, derived from the sample count so
  /// that samples_per_curve = 4 * interference * omega_max + 1 holds.
  int omega_max() const;
  /// Highest frequency assigned to complementary factors.
  int complementary_budget() const;
  std::size_t rows() const;

  /// Throws ValidationError when the sample count cannot support the
  /// frequency set.
  void validate() const;
};

struct SampleMatrix {
  std::vector<std::string> factor_names;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major

  double at(std::size_t row, std::size_t col) const {
    return values[row * cols + col];
  }
  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * cols, cols};
  }
};

/// The eFAST sample matrix: one block of samples_per_curve rows per
/// (factor of interest, resample), factors in declaration order.
SampleMatrix generate_samples(const EfastPlan& plan, std::uint64_t seed);

struct SensitivityResult {
  struct Entry {
    std::string name;
    double first_order = 0.0;
    double total_order = 0.0;
  };
  std::vector<Entry> entries;  // declaration order
  /// Set when some search curve produced (numerically) constant output;
  /// affected indices are reported as 0.
  bool degenerate = false;
};

using ModelFunction = std::function<double(std::span<const double>)>;

/// Runs the model over the sample matrix and decomposes the output variance.
/// threads <= 0 means one worker per hardware thread; results are identical
/// for every parallelism degree.
SensitivityResult efast_indices(const ModelFunction& model, const EfastPlan& plan,
                                std::uint64_t seed, int threads = 1);

/// Index computation from a precomputed, row-aligned output vector
/// (the read-back half of the samples.csv / output.csv interchange).
SensitivityResult efast_indices_from_outputs(const EfastPlan& plan,
                                             std::span<const double> outputs);

/// The Ishigami test function, the standard benchmark for variance-based
/// sensitivity estimators.
double ishigami(double x1, double x2, double x3, double a = 7.0, double b = 0.1);

/// Three factors uniform on [-pi, pi] driving the Ishigami function.
EfastPlan ishigami_plan();

}  // namespace qecon
