#pragma once

#include <map>
#include <string>
#include <vector>

#include "qecon/econ.hpp"
#include "qecon/scenario.hpp"

namespace qecon {

// The simplified model for real projects: faults are grouped into defect
// types carrying averaged quantities, the difficulty is always linear in
// effort, and defect propagation is dropped. The sum over faults is realized
// as expected_fault_count times the type-fraction-weighted sums; fractional
// expected counts per type are allowed.

struct DefectType {
  int id = 0;
  std::string name;
  double fraction = 0.0;             // share of all defects of this type
  double failure_probability = 0.0;  // per type
  double avg_field_removal_cost = 0.0;
  double avg_field_effect_cost = 0.0;

  double avg_field_cost() const {
    return avg_field_removal_cost + avg_field_effect_cost;
  }
};

struct PracticalTechnique {
  int id = 0;
  std::string name;
  double avg_setup_cost = 0.0;
  double execution_cost_rate = 0.0;          // money per person-hour
  std::map<int, double> avg_removal_cost;    // defect type id -> cost
  std::map<int, double> difficulty_slope;    // defect type id -> m <= 0; 0 = undetectable
};

struct PracticalScenario {
  double labour_rate = 0.0;
  double expected_fault_count = 0.0;
  std::vector<DefectType> defect_types;
  std::vector<PracticalTechnique> techniques;
};

void validate_practical(const PracticalScenario& scenario);

/// Linear non-detection probability for one defect type: clamp(m*t + 1, 0, 1).
double practical_difficulty(const PracticalTechnique& technique, int type_id,
                            Effort t);

double practical_direct_single(const PracticalTechnique& technique, Effort t,
                               const PracticalScenario& scenario);
double practical_revenues_single(const PracticalTechnique& technique, Effort t,
                                 const PracticalScenario& scenario);
double practical_future_single(const PracticalTechnique& technique, Effort t,
                               const PracticalScenario& scenario);

CostBreakdown practical_combined(const Program& program,
                                 const PracticalScenario& scenario);

/// Combined components without the ROI (usable when direct + future may be 0).
CombinedCosts practical_combined_costs(const Program& program,
                                       const PracticalScenario& scenario);

/// The conserved total: expected_fault_count * sum of
/// fraction * failure_probability * avg field cost.
double practical_field_exposure(const PracticalScenario& scenario);

/// Expands the averaged scenario into an explicit fault population for the
/// analytical model: whole faults per type plus, for a fractional remainder,
/// one fault with costs scaled by the remainder. Evaluates identically to
/// the practical equations.
Scenario expand_practical(const PracticalScenario& scenario);

}  // namespace qecon
