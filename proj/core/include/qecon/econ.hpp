#pragma once

#include <span>

#include "qecon/scenario.hpp"

namespace qecon {

// The analytical cost model. Direct costs are what an application of a
// technique costs in-house; future costs are expected field costs of faults
// nobody detects; revenues are the field costs avoided by in-house
// detection. An application with zero effort is treated as absent: it incurs
// no setup cost and detects nothing.

double execution_cost(const Technique& technique, Effort t);

double direct_costs_single(const Technique& technique, Effort t,
                           std::span<const Fault> faults);
double future_costs_single(const Technique& technique, Effort t,
                           std::span<const Fault> faults);
double revenues_single(const Technique& technique, Effort t,
                       std::span<const Fault> faults);

/// Probability that neither the fault nor any of its (transitive)
/// predecessors was detected by the applications strictly before `position`.
double residual_nondetection(const ScenarioIndex& index, const Program& program,
                             std::size_t position, int fault_id);

/// All four combined cost components in one pass over the program.
struct CombinedCosts {
  double direct = 0.0;
  double future = 0.0;
  double revenue = 0.0;
  /// Field savings from faults removed because a predecessor was detected
  /// first; saved, but attributed to no specific application's revenue.
  double screened = 0.0;
};
CombinedCosts combined_costs(const ScenarioIndex& index, const Program& program);

double direct_costs_combined(const ScenarioIndex& index, const Program& program);
double future_costs_combined(const ScenarioIndex& index, const Program& program);
double revenues_combined(const ScenarioIndex& index, const Program& program);
double screened_savings(const ScenarioIndex& index, const Program& program);

double direct_costs_combined(const Scenario& scenario, const Program& program);
double future_costs_combined(const Scenario& scenario, const Program& program);
double revenues_combined(const Scenario& scenario, const Program& program);

/// Total expected field cost with no detection at all:
/// the conserved quantity revenue + future + screened always sums to.
double total_field_exposure(const Scenario& scenario);

/// (revenue - direct - future) / (direct + future).
/// Throws NumericError when direct + future == 0.
double roi(double direct, double future, double revenue);

/// Combined direct/future/revenue plus the ROI.
CostBreakdown evaluate_program(const Scenario& scenario, const Program& program);

}  // namespace qecon
