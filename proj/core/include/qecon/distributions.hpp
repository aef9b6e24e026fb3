#pragma once

#include <variant>
#include <vector>

#include "qecon/errors.hpp"

namespace qecon {

// Input-factor distributions for sensitivity analysis. Sampling goes through
// the inverse CDF so that deterministic search curves can drive it; sampled
// values always stay within the declared bounds.

struct UniformDist {
  double lo, hi;
  friend bool operator==(const UniformDist&, const UniformDist&) = default;
};

struct DiscreteUniformDist {
  std::vector<double> values;
  friend bool operator==(const DiscreteUniformDist&, const DiscreteUniformDist&) = default;
};

struct TriangularDist {
  double lo, mode, hi;
  friend bool operator==(const TriangularDist&, const TriangularDist&) = default;
};

struct TruncatedNormalDist {
  double mean, sd, lo, hi;
  friend bool operator==(const TruncatedNormalDist&, const TruncatedNormalDist&) = default;
};

class FactorDistribution {
 public:
  using Kind = std::variant<UniformDist, DiscreteUniformDist, TriangularDist,
                            TruncatedNormalDist>;

  static FactorDistribution uniform(double lo, double hi);
  static FactorDistribution discrete_uniform(std::vector<double> values);
  static FactorDistribution triangular(double lo, double mode, double hi);
  static FactorDistribution truncated_normal(double mean, double sd, double lo,
                                             double hi);

  /// Inverse CDF at u in [0, 1].
  double quantile(double u) const;

  double lower() const;
  double upper() const;
  /// The distribution median; used for midpoint/nominal evaluations.
  double median() const { return quantile(0.5); }

  const Kind& kind() const { return kind_; }

  friend bool operator==(const FactorDistribution&, const FactorDistribution&) = default;

 private:
  explicit FactorDistribution(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile, accurate to full double precision
/// (rational approximation refined with one Halley step).
double normal_quantile(double p);

}  // namespace qecon
