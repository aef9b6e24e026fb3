#include "qecon/econ.hpp"

#include <string>
#include <vector>

#include "qecon/errors.hpp"

namespace qecon {

namespace {

const DifficultyCurve& difficulty_for(const Technique& technique, int fault_id) {
  auto it = technique.difficulty.find(fault_id);
  if (it == technique.difficulty.end()) {
    throw ValidationError("technique " + std::to_string(technique.id) +
                          " has no difficulty entry for fault " +
                          std::to_string(fault_id));
  }
  return it->second;
}

double removal_cost_for(const Technique& technique, int fault_id) {
  auto it = technique.removal_cost.find(fault_id);
  if (it == technique.removal_cost.end()) {
    throw ValidationError("technique " + std::to_string(technique.id) +
                          " has no removal_cost entry for fault " +
                          std::to_string(fault_id));
  }
  return it->second;
}

}  // namespace

double execution_cost(const Technique& technique, Effort t) {
  return technique.execution_cost_rate * t.hours();
}

double direct_costs_single(const Technique& technique, Effort t,
                           std::span<const Fault> faults) {
  if (t.is_zero()) return 0.0;
  double d = technique.setup_cost + execution_cost(technique, t);
  for (const Fault& f : faults) {
    const double theta = difficulty_for(technique, f.id)(t);
    d += (1.0 - theta) * removal_cost_for(technique, f.id);
  }
  return d;
}

double future_costs_single(const Technique& technique, Effort t,
                           std::span<const Fault> faults) {
  double cost = 0.0;
  for (const Fault& f : faults) {
    const double theta = t.is_zero() ? 1.0 : difficulty_for(technique, f.id)(t);
    cost += f.failure_probability * theta * f.field_cost();
  }
  return cost;
}

double revenues_single(const Technique& technique, Effort t,
                       std::span<const Fault> faults) {
  if (t.is_zero()) return 0.0;
  double r = 0.0;
  for (const Fault& f : faults) {
    const double theta = difficulty_for(technique, f.id)(t);
    r += f.failure_probability * (1.0 - theta) * f.field_cost();
  }
  return r;
}

double residual_nondetection(const ScenarioIndex& index, const Program& program,
                             std::size_t position, int fault_id) {
  if (position > program.applications.size()) {
    throw ValidationError("residual position past the end of the program");
  }
  const Fault& fault = index.fault(fault_id);
  double residual = 1.0;
  for (std::size_t y = 0; y < position; ++y) {
    const Application& app = program.applications[y];
    if (app.effort.is_zero()) continue;
    const Technique& tech = index.technique(app.technique_id);
    residual *= difficulty_for(tech, fault.id)(app.effort);
    for (int j : index.ancestors(fault.id)) {
      residual *= difficulty_for(tech, j)(app.effort);
    }
  }
  return residual;
}

CombinedCosts combined_costs(const ScenarioIndex& index, const Program& program) {
  const Scenario& scenario = index.scenario();
  const std::size_t n = scenario.faults.size();

  // Running product over earlier applications of "neither the fault nor any
  // transitive predecessor was detected".
  std::vector<double> residual(n, 1.0);

  CombinedCosts out;
  for (const Application& app : program.applications) {
    if (app.effort.is_zero()) continue;
    const Technique& tech = index.technique(app.technique_id);
    out.direct += tech.setup_cost + execution_cost(tech, app.effort);

    for (std::size_t i = 0; i < n; ++i) {
      const Fault& f = scenario.faults[i];
      const double theta_own = difficulty_for(tech, f.id)(app.effort);
      double theta_pred = 1.0;
      for (int j : index.ancestors(f.id)) {
        theta_pred *= difficulty_for(tech, j)(app.effort);
      }

      out.direct += (1.0 - theta_own) * residual[i] * removal_cost_for(tech, f.id);
      out.revenue +=
          f.failure_probability * (1.0 - theta_own) * residual[i] * f.field_cost();
      // Fault survives its own draw but loses a predecessor at this
      // application: removed all the same, revenue credited to nobody.
      out.screened += f.failure_probability * theta_own * (1.0 - theta_pred) *
                      residual[i] * f.field_cost();

      residual[i] *= theta_own * theta_pred;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Fault& f = scenario.faults[i];
    out.future += f.failure_probability * residual[i] * f.field_cost();
  }
  return out;
}

double direct_costs_combined(const ScenarioIndex& index, const Program& program) {
  return combined_costs(index, program).direct;
}
double future_costs_combined(const ScenarioIndex& index, const Program& program) {
  return combined_costs(index, program).future;
}
double revenues_combined(const ScenarioIndex& index, const Program& program) {
  return combined_costs(index, program).revenue;
}
double screened_savings(const ScenarioIndex& index, const Program& program) {
  return combined_costs(index, program).screened;
}

double direct_costs_combined(const Scenario& scenario, const Program& program) {
  return direct_costs_combined(ScenarioIndex(scenario), program);
}
double future_costs_combined(const Scenario& scenario, const Program& program) {
  return future_costs_combined(ScenarioIndex(scenario), program);
}
double revenues_combined(const Scenario& scenario, const Program& program) {
  return revenues_combined(ScenarioIndex(scenario), program);
}

double total_field_exposure(const Scenario& scenario) {
  double total = 0.0;
  for (const Fault& f : scenario.faults) {
    total += f.failure_probability * f.field_cost();
  }
  return total;
}

double roi(double direct, double future, double revenue) {
  const double invested = direct + future;
  if (invested == 0.0) {
    throw NumericError("ROI is undefined: direct + future costs are zero");
  }
  return (revenue - direct - future) / invested;
}

CostBreakdown evaluate_program(const Scenario& scenario, const Program& program) {
  validate_program(program, scenario);
  const ScenarioIndex index(scenario);
  const CombinedCosts c = combined_costs(index, program);
  return CostBreakdown{c.direct, c.future, c.revenue,
                       roi(c.direct, c.future, c.revenue)};
}

}  // namespace qecon
