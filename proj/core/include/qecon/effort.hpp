#pragma once

#include <cmath>
#include <compare>

#include "qecon/errors.hpp"

namespace qecon {

/// Effort spent on one application of a defect-detection technique.
/// The canonical unit is person-hours; staff-days convert at a fixed
/// 8 hours per day.
class Effort {
 public:
  static constexpr double kHoursPerStaffDay = 8.0;

  constexpr Effort() = default;

  explicit Effort(double hours) : hours_(hours) {
    if (!std::isfinite(hours) || hours < 0.0) {
      throw ValidationError("effort must be a finite, non-negative number of "
                            "person-hours");
    }
  }

  static Effort from_staff_days(double days) {
    return Effort(days * kHoursPerStaffDay);
  }

  double hours() const { return hours_; }
  double staff_days() const { return hours_ / kHoursPerStaffDay; }
  bool is_zero() const { return hours_ == 0.0; }

  friend auto operator<=>(const Effort&, const Effort&) = default;

 private:
  double hours_ = 0.0;
};

}  // namespace qecon
