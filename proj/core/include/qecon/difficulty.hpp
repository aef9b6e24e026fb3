#pragma once

#include <variant>

#include "qecon/effort.hpp"
#include "qecon/errors.hpp"

namespace qecon {

// A difficulty curve gives the probability that a technique does NOT detect
// a given fault after spending a given effort. Four functional forms are
// supported; every form evaluates into [0, 1] and is non-increasing in
// effort. Constant(1.0) encodes "this technique cannot detect this fault".

struct ExponentialForm {
  double rate;  // > 0; the inverse of the mean measured difficulty
  friend bool operator==(const ExponentialForm&, const ExponentialForm&) = default;
};

struct LinearForm {
  double slope;  // <= 0
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct ConstantForm {
  double value;  // in [0, 1]
  friend bool operator==(const ConstantForm&, const ConstantForm&) = default;
};

struct SigmoidForm {
  double steepness;       // > 0
  double midpoint_hours;  // >= 0; effort at which the curve crosses 0.5
  friend bool operator==(const SigmoidForm&, const SigmoidForm&) = default;
};

class DifficultyCurve {
 public:
  using Form = std::variant<ExponentialForm, LinearForm, ConstantForm, SigmoidForm>;

  static DifficultyCurve exponential(double rate);
  static DifficultyCurve linear(double slope);
  static DifficultyCurve constant(double value);
  static DifficultyCurve sigmoid(double steepness, double midpoint_hours);

  /// Probability of non-detection after effort t.
  double operator()(Effort t) const;

  const Form& form() const { return form_; }
  bool is_constant_one() const;

  friend bool operator==(const DifficultyCurve&, const DifficultyCurve&) = default;

 private:
  explicit DifficultyCurve(Form form) : form_(form) {}
  Form form_;
};

double eval_difficulty(const DifficultyCurve& curve, Effort t);

/// Exponential calibration from a mean measured difficulty in (0, 1]:
/// the rate is the inverse of the mean.
DifficultyCurve calibrate_exponential(double mean_difficulty);

}  // namespace qecon
