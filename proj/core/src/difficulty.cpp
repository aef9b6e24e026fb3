#include "qecon/difficulty.hpp"

#include <algorithm>
#include <cmath>

namespace qecon {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

DifficultyCurve DifficultyCurve::exponential(double rate) {
  if (!std::isfinite(rate) || rate <= 0.0) {
    throw ValidationError("exponential difficulty requires a positive rate");
  }
  return DifficultyCurve(Form{ExponentialForm{rate}});
}

DifficultyCurve DifficultyCurve::linear(double slope) {
  if (!std::isfinite(slope) || slope > 0.0) {
    throw ValidationError("linear difficulty requires a non-positive slope");
  }
  return DifficultyCurve(Form{LinearForm{slope}});
}

DifficultyCurve DifficultyCurve::constant(double value) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw ValidationError("constant difficulty must lie in [0, 1]");
  }
  return DifficultyCurve(Form{ConstantForm{value}});
}

DifficultyCurve DifficultyCurve::sigmoid(double steepness, double midpoint_hours) {
  if (!std::isfinite(steepness) || steepness <= 0.0) {
    throw ValidationError("sigmoid difficulty requires a positive steepness");
  }
  if (!std::isfinite(midpoint_hours) || midpoint_hours < 0.0) {
    throw ValidationError("sigmoid difficulty requires a non-negative midpoint");
  }
  return DifficultyCurve(Form{SigmoidForm{steepness, midpoint_hours}});
}

double DifficultyCurve::operator()(Effort t) const {
  const double hours = t.hours();
  return std::visit(
      [hours](const auto& f) -> double {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, ExponentialForm>) {
          // rate * exp(-rate * t) exceeds 1 for rate > 1 at small t; clamp so
          // the value stays a probability. t = 0 is pinned to 1.
          if (hours == 0.0) return 1.0;
          return std::min(1.0, f.rate * std::exp(-f.rate * hours));
        } else if constexpr (std::is_same_v<F, LinearForm>) {
          return clamp01(f.slope * hours + 1.0);
        } else if constexpr (std::is_same_v<F, ConstantForm>) {
          return f.value;
        } else {
          // Complementary logistic: a turned S crossing 0.5 at the midpoint.
          return 1.0 / (1.0 + std::exp(f.steepness * (hours - f.midpoint_hours)));
        }
      },
      form_);
}

bool DifficultyCurve::is_constant_one() const {
  const auto* c = std::get_if<ConstantForm>(&form_);
  return c != nullptr && c->value == 1.0;
}

double eval_difficulty(const DifficultyCurve& curve, Effort t) { return curve(t); }

DifficultyCurve calibrate_exponential(double mean_difficulty) {
  if (!std::isfinite(mean_difficulty) || mean_difficulty <= 0.0 ||
      mean_difficulty > 1.0) {
    throw ValidationError(
        "exponential calibration requires a mean difficulty in (0, 1]");
  }
  return DifficultyCurve::exponential(1.0 / mean_difficulty);
}

}  // namespace qecon
