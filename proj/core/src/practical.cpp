#include "qecon/practical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qecon/errors.hpp"

namespace qecon {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

double slope_for(const PracticalTechnique& technique, int type_id) {
  auto it = technique.difficulty_slope.find(type_id);
  if (it == technique.difficulty_slope.end()) {
    throw ValidationError("technique " + std::to_string(technique.id) +
                          " has no difficulty_slope entry for defect type " +
                          std::to_string(type_id));
  }
  return it->second;
}

double removal_for(const PracticalTechnique& technique, int type_id) {
  auto it = technique.avg_removal_cost.find(type_id);
  if (it == technique.avg_removal_cost.end()) {
    throw ValidationError("technique " + std::to_string(technique.id) +
                          " has no avg_removal_cost entry for defect type " +
                          std::to_string(type_id));
  }
  return it->second;
}

const PracticalTechnique& technique_by_id(const PracticalScenario& scenario,
                                          int id) {
  for (const PracticalTechnique& t : scenario.techniques) {
    if (t.id == id) return t;
  }
  throw ValidationError("program references unknown technique " +
                        std::to_string(id));
}

}  // namespace

void validate_practical(const PracticalScenario& scenario) {
  require(std::isfinite(scenario.labour_rate) && scenario.labour_rate >= 0.0,
          "labour_rate must be finite and non-negative");
  require(std::isfinite(scenario.expected_fault_count) &&
              scenario.expected_fault_count >= 0.0,
          "expected_fault_count must be non-negative");

  double fraction_sum = 0.0;
  std::set<int> type_ids;
  for (const DefectType& d : scenario.defect_types) {
    require(type_ids.insert(d.id).second,
            "duplicate defect type id " + std::to_string(d.id));
    require(d.fraction >= 0.0 && d.fraction <= 1.0,
            "fraction of defect type " + std::to_string(d.id) +
                " must lie in [0, 1]");
    require(d.failure_probability >= 0.0 && d.failure_probability <= 1.0,
            "failure_probability of defect type " + std::to_string(d.id) +
                " must lie in [0, 1]");
    require(d.avg_field_removal_cost >= 0.0 && d.avg_field_effect_cost >= 0.0,
            "field costs of defect type " + std::to_string(d.id) +
                " must be non-negative");
    fraction_sum += d.fraction;
  }
  if (!scenario.defect_types.empty()) {
    require(std::abs(fraction_sum - 1.0) <= 1e-9,
            "defect type fractions must sum to 1");
  }

  std::set<int> tech_ids;
  for (const PracticalTechnique& t : scenario.techniques) {
    require(t.id >= 0 && t.id <= 6, "technique id " + std::to_string(t.id) +
                                        " outside the canonical range 0..6");
    require(tech_ids.insert(t.id).second,
            "duplicate technique id " + std::to_string(t.id));
    require(t.avg_setup_cost >= 0.0 && t.execution_cost_rate >= 0.0,
            "costs of technique " + std::to_string(t.id) +
                " must be non-negative");
    for (const DefectType& d : scenario.defect_types) {
      const double m = slope_for(t, d.id);
      require(std::isfinite(m) && m <= 0.0,
              "difficulty_slope of technique " + std::to_string(t.id) +
                  " for defect type " + std::to_string(d.id) +
                  " must be non-positive");
      require(removal_for(t, d.id) >= 0.0,
              "avg_removal_cost of technique " + std::to_string(t.id) +
                  " for defect type " + std::to_string(d.id) +
                  " must be non-negative");
    }
    for (const auto& [tid, m] : t.difficulty_slope) {
      require(type_ids.count(tid) != 0,
              "difficulty_slope of technique " + std::to_string(t.id) +
                  " references unknown defect type " + std::to_string(tid));
    }
    for (const auto& [tid, c] : t.avg_removal_cost) {
      require(type_ids.count(tid) != 0,
              "avg_removal_cost of technique " + std::to_string(t.id) +
                  " references unknown defect type " + std::to_string(tid));
    }
  }
}

double practical_difficulty(const PracticalTechnique& technique, int type_id,
                            Effort t) {
  return std::clamp(slope_for(technique, type_id) * t.hours() + 1.0, 0.0, 1.0);
}

double practical_direct_single(const PracticalTechnique& technique, Effort t,
                               const PracticalScenario& scenario) {
  if (t.is_zero()) return 0.0;
  double d = technique.avg_setup_cost + technique.execution_cost_rate * t.hours();
  for (const DefectType& type : scenario.defect_types) {
    const double theta = practical_difficulty(technique, type.id, t);
    d += scenario.expected_fault_count * type.fraction * (1.0 - theta) *
         removal_for(technique, type.id);
  }
  return d;
}

double practical_revenues_single(const PracticalTechnique& technique, Effort t,
                                 const PracticalScenario& scenario) {
  if (t.is_zero()) return 0.0;
  double r = 0.0;
  for (const DefectType& type : scenario.defect_types) {
    const double theta = practical_difficulty(technique, type.id, t);
    r += scenario.expected_fault_count * type.fraction *
         type.failure_probability * (1.0 - theta) * type.avg_field_cost();
  }
  return r;
}

double practical_future_single(const PracticalTechnique& technique, Effort t,
                               const PracticalScenario& scenario) {
  double cost = 0.0;
  for (const DefectType& type : scenario.defect_types) {
    const double theta =
        t.is_zero() ? 1.0 : practical_difficulty(technique, type.id, t);
    cost += scenario.expected_fault_count * type.fraction *
            type.failure_probability * theta * type.avg_field_cost();
  }
  return cost;
}

CombinedCosts practical_combined_costs(const Program& program,
                                       const PracticalScenario& scenario) {
  const std::size_t n = scenario.defect_types.size();
  std::vector<double> residual(n, 1.0);

  CombinedCosts out;
  for (const Application& app : program.applications) {
    if (app.effort.is_zero()) continue;
    const PracticalTechnique& tech = technique_by_id(scenario, app.technique_id);
    out.direct += tech.avg_setup_cost + tech.execution_cost_rate * app.effort.hours();

    for (std::size_t i = 0; i < n; ++i) {
      const DefectType& type = scenario.defect_types[i];
      const double theta = practical_difficulty(tech, type.id, app.effort);
      const double weight = scenario.expected_fault_count * type.fraction;
      out.direct += weight * (1.0 - theta) * residual[i] * removal_for(tech, type.id);
      out.revenue += weight * type.failure_probability * (1.0 - theta) *
                     residual[i] * type.avg_field_cost();
      residual[i] *= theta;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const DefectType& type = scenario.defect_types[i];
    out.future += scenario.expected_fault_count * type.fraction *
                  type.failure_probability * residual[i] * type.avg_field_cost();
  }
  return out;
}

CostBreakdown practical_combined(const Program& program,
                                 const PracticalScenario& scenario) {
  const CombinedCosts c = practical_combined_costs(program, scenario);
  return CostBreakdown{c.direct, c.future, c.revenue,
                       roi(c.direct, c.future, c.revenue)};
}

double practical_field_exposure(const PracticalScenario& scenario) {
  double total = 0.0;
  for (const DefectType& type : scenario.defect_types) {
    total += scenario.expected_fault_count * type.fraction *
             type.failure_probability * type.avg_field_cost();
  }
  return total;
}

Scenario expand_practical(const PracticalScenario& scenario) {
  validate_practical(scenario);

  // One block of identical faults per defect type; a fractional remainder
  // becomes one more fault with all linear cost terms scaled down by it.
  struct Slot {
    int type_id;
    double weight;  // 1 for whole faults, the remainder for the last one
  };
  std::vector<Slot> slots;
  for (const DefectType& type : scenario.defect_types) {
    const double count = scenario.expected_fault_count * type.fraction;
    const double whole = std::floor(count);
    for (double k = 0; k < whole; ++k) slots.push_back({type.id, 1.0});
    if (count - whole > 0.0) slots.push_back({type.id, count - whole});
  }

  std::map<int, const DefectType*> types;
  for (const DefectType& t : scenario.defect_types) types[t.id] = &t;

  Scenario out;
  out.labour_rate = scenario.labour_rate;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const DefectType& type = *types.at(slots[i].type_id);
    Fault f;
    f.id = static_cast<int>(i);
    f.doc_class = DocumentClass::code;
    f.failure_probability = type.failure_probability;
    f.field_removal_cost = slots[i].weight * type.avg_field_removal_cost;
    f.field_effect_cost = slots[i].weight * type.avg_field_effect_cost;
    out.faults.push_back(std::move(f));
  }

  for (const PracticalTechnique& pt : scenario.techniques) {
    Technique t;
    t.id = pt.id;
    t.name = pt.name;
    t.setup_cost = pt.avg_setup_cost;
    t.execution_cost_rate = pt.execution_cost_rate;
    t.capable_classes = {DocumentClass::code};
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const int fault_id = static_cast<int>(i);
      const double m = pt.difficulty_slope.at(slots[i].type_id);
      t.removal_cost[fault_id] =
          slots[i].weight * pt.avg_removal_cost.at(slots[i].type_id);
      t.difficulty.emplace(fault_id, m == 0.0 ? DifficultyCurve::constant(1.0)
                                              : DifficultyCurve::linear(m));
    }
    out.techniques.push_back(std::move(t));
  }

  validate_scenario(out);
  return out;
}

}  // namespace qecon
