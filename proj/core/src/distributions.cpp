#include "qecon/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace qecon {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

bool all_finite(std::initializer_list<double> xs) {
  return std::all_of(xs.begin(), xs.end(),
                     [](double x) { return std::isfinite(x); });
}

}  // namespace

FactorDistribution FactorDistribution::uniform(double lo, double hi) {
  require(all_finite({lo, hi}) && lo <= hi, "uniform distribution needs lo <= hi");
  return FactorDistribution(Kind{UniformDist{lo, hi}});
}

FactorDistribution FactorDistribution::discrete_uniform(std::vector<double> values) {
  require(!values.empty(), "discrete uniform distribution needs at least one value");
  for (double v : values) require(std::isfinite(v), "discrete uniform values must be finite");
  return FactorDistribution(Kind{DiscreteUniformDist{std::move(values)}});
}

FactorDistribution FactorDistribution::triangular(double lo, double mode, double hi) {
  require(all_finite({lo, mode, hi}) && lo <= mode && mode <= hi && lo < hi,
          "triangular distribution needs lo <= mode <= hi with lo < hi");
  return FactorDistribution(Kind{TriangularDist{lo, mode, hi}});
}

FactorDistribution FactorDistribution::truncated_normal(double mean, double sd,
                                                        double lo, double hi) {
  require(all_finite({mean, sd, lo, hi}) && sd > 0.0 && lo < hi,
          "truncated normal distribution needs sd > 0 and lo < hi");
  return FactorDistribution(Kind{TruncatedNormalDist{mean, sd, lo, hi}});
}

double FactorDistribution::quantile(double u) const {
  u = std::clamp(u, 0.0, 1.0);
  return std::visit(
      [u](const auto& d) -> double {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, UniformDist>) {
          return d.lo + u * (d.hi - d.lo);
        } else if constexpr (std::is_same_v<D, DiscreteUniformDist>) {
          const auto n = d.values.size();
          auto idx = static_cast<std::size_t>(u * static_cast<double>(n));
          if (idx >= n) idx = n - 1;
          return d.values[idx];
        } else if constexpr (std::is_same_v<D, TriangularDist>) {
          const double span = d.hi - d.lo;
          const double cut = (d.mode - d.lo) / span;
          double x;
          if (u <= cut) {
            x = d.lo + std::sqrt(u * span * (d.mode - d.lo));
          } else {
            x = d.hi - std::sqrt((1.0 - u) * span * (d.hi - d.mode));
          }
          return std::clamp(x, d.lo, d.hi);
        } else {
          const double a = normal_cdf((d.lo - d.mean) / d.sd);
          const double b = normal_cdf((d.hi - d.mean) / d.sd);
          const double p = a + u * (b - a);
          const double x = d.mean + d.sd * normal_quantile(p);
          return std::clamp(x, d.lo, d.hi);
        }
      },
      kind_);
}

double FactorDistribution::lower() const {
  return std::visit(
      [](const auto& d) -> double {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, DiscreteUniformDist>) {
          return *std::min_element(d.values.begin(), d.values.end());
        } else {
          return d.lo;
        }
      },
      kind_);
}

double FactorDistribution::upper() const {
  return std::visit(
      [](const auto& d) -> double {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, DiscreteUniformDist>) {
          return *std::max_element(d.values.begin(), d.values.end());
        } else {
          return d.hi;
        }
      },
      kind_);
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * std::numbers::inv_sqrt2);
}

namespace {

// Acklam's rational approximation to the standard normal quantile.
double normal_quantile_approx(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw ValidationError("normal quantile requires p in [0, 1]");
  }
  double x = normal_quantile_approx(p);
  // One Halley step against erfc brings the approximation to ~1e-15.
  const double e = normal_cdf(x) - p;
  const double u = e * std::numbers::sqrt2 * std::sqrt(std::numbers::pi) *
                   std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

}  // namespace qecon
