#include "qecon/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "qecon/errors.hpp"

namespace qecon {

int pipeline_rank(DocumentClass c) {
  switch (c) {
    case DocumentClass::requirements: return 0;
    case DocumentClass::design: return 1;
    case DocumentClass::code: return 2;
    case DocumentClass::test_spec: return 2;
  }
  return 0;
}

bool can_precede(DocumentClass pred, DocumentClass succ) {
  return pred == succ || pipeline_rank(pred) < pipeline_rank(succ);
}

std::string_view to_string(DocumentClass c) {
  switch (c) {
    case DocumentClass::requirements: return "requirements";
    case DocumentClass::design: return "design";
    case DocumentClass::code: return "code";
    case DocumentClass::test_spec: return "test_spec";
  }
  return "code";
}

std::optional<DocumentClass> document_class_from_string(std::string_view s) {
  for (DocumentClass c : kAllDocumentClasses) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::string_view default_technique_name(int id) {
  switch (id) {
    case 0: return "requirements inspection";
    case 1: return "design inspection";
    case 2: return "static analysis";
    case 3: return "code inspection";
    case 4: return "unit test";
    case 5: return "integration test";
    case 6: return "system test";
    default: return "technique";
  }
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void validate_scenario(const Scenario& scenario) {
  require(finite_nonneg(scenario.labour_rate),
          "labour_rate must be finite and non-negative");

  std::map<int, const Fault*> faults;
  for (const Fault& f : scenario.faults) {
    require(faults.emplace(f.id, &f).second,
            "duplicate fault id " + std::to_string(f.id));
    require(std::isfinite(f.failure_probability) && f.failure_probability >= 0.0 &&
                f.failure_probability <= 1.0,
            "failure_probability of fault " + std::to_string(f.id) +
                " must lie in [0, 1]");
    require(finite_nonneg(f.field_removal_cost),
            "field_removal_cost of fault " + std::to_string(f.id) +
                " must be non-negative");
    require(finite_nonneg(f.field_effect_cost),
            "field_effect_cost of fault " + std::to_string(f.id) +
                " must be non-negative");
  }

  for (const Fault& f : scenario.faults) {
    for (int p : f.predecessors) {
      auto it = faults.find(p);
      require(it != faults.end(), "fault " + std::to_string(f.id) +
                                      " references unknown predecessor " +
                                      std::to_string(p));
      require(p != f.id,
              "fault " + std::to_string(f.id) + " lists itself as predecessor");
      require(can_precede(it->second->doc_class, f.doc_class),
              "predecessor " + std::to_string(p) + " of fault " +
                  std::to_string(f.id) +
                  " lives in a later document class than the fault");
    }
  }

  // Cycle check over the predecessor graph.
  enum class Mark { unseen, active, done };
  std::map<int, Mark> marks;
  std::function<void(int)> visit = [&](int id) {
    Mark& m = marks[id];
    if (m == Mark::done) return;
    require(m != Mark::active, "predecessor references of fault " +
                                   std::to_string(id) + " form a cycle");
    m = Mark::active;
    for (int p : faults.at(id)->predecessors) visit(p);
    marks[id] = Mark::done;
  };
  for (const Fault& f : scenario.faults) visit(f.id);

  std::set<int> technique_ids;
  for (const Technique& t : scenario.techniques) {
    require(t.id >= 0 && t.id <= 6, "technique id " + std::to_string(t.id) +
                                        " outside the canonical range 0..6");
    require(technique_ids.insert(t.id).second,
            "duplicate technique id " + std::to_string(t.id));
    require(finite_nonneg(t.setup_cost), "setup_cost of technique " +
                                             std::to_string(t.id) +
                                             " must be non-negative");
    require(finite_nonneg(t.execution_cost_rate),
            "execution_cost_rate of technique " + std::to_string(t.id) +
                " must be non-negative");

    for (const auto& [fid, cost] : t.removal_cost) {
      require(faults.count(fid) != 0, "removal_cost of technique " +
                                          std::to_string(t.id) +
                                          " references unknown fault " +
                                          std::to_string(fid));
      require(finite_nonneg(cost), "removal_cost of technique " +
                                       std::to_string(t.id) + " for fault " +
                                       std::to_string(fid) +
                                       " must be non-negative");
    }
    for (const auto& [fid, curve] : t.difficulty) {
      auto it = faults.find(fid);
      require(it != faults.end(), "difficulty of technique " +
                                      std::to_string(t.id) +
                                      " references unknown fault " +
                                      std::to_string(fid));
      if (t.capable_classes.count(it->second->doc_class) == 0) {
        require(curve.is_constant_one(),
                "technique " + std::to_string(t.id) +
                    " is not capable of the document class of fault " +
                    std::to_string(fid) +
                    ", so its difficulty must be constant 1");
      }
    }
    for (const Fault& f : scenario.faults) {
      require(t.difficulty.count(f.id) != 0,
              "technique " + std::to_string(t.id) +
                  " is missing a difficulty entry for fault " +
                  std::to_string(f.id));
      require(t.removal_cost.count(f.id) != 0,
              "technique " + std::to_string(t.id) +
                  " is missing a removal_cost entry for fault " +
                  std::to_string(f.id));
    }
  }
}

void validate_program(const Program& program, const Scenario& scenario) {
  std::set<int> ids;
  for (const Technique& t : scenario.techniques) ids.insert(t.id);
  for (const Application& a : program.applications) {
    if (ids.count(a.technique_id) == 0) {
      throw ValidationError("program references unknown technique " +
                            std::to_string(a.technique_id));
    }
  }
}

ScenarioIndex::ScenarioIndex(const Scenario& scenario) : scenario_(&scenario) {
  for (std::size_t i = 0; i < scenario.faults.size(); ++i) {
    fault_pos_[scenario.faults[i].id] = i;
  }
  for (std::size_t i = 0; i < scenario.techniques.size(); ++i) {
    technique_pos_[scenario.techniques[i].id] = i;
  }

  // Transitive closure of the predecessor relation, memoized per fault.
  ancestors_.resize(scenario.faults.size());
  std::vector<char> done(scenario.faults.size(), 0);
  std::function<void(std::size_t)> close = [&](std::size_t pos) {
    if (done[pos]) return;
    done[pos] = 1;  // the graph is acyclic (validated), so this is safe
    std::set<int> acc;
    for (int p : scenario.faults[pos].predecessors) {
      const std::size_t ppos = fault_pos_.at(p);
      close(ppos);
      acc.insert(p);
      acc.insert(ancestors_[ppos].begin(), ancestors_[ppos].end());
    }
    ancestors_[pos].assign(acc.begin(), acc.end());
  };
  for (std::size_t i = 0; i < scenario.faults.size(); ++i) close(i);
}

const Fault& ScenarioIndex::fault(int id) const {
  auto it = fault_pos_.find(id);
  if (it == fault_pos_.end()) {
    throw ValidationError("unknown fault id " + std::to_string(id));
  }
  return scenario_->faults[it->second];
}

const Technique& ScenarioIndex::technique(int id) const {
  auto it = technique_pos_.find(id);
  if (it == technique_pos_.end()) {
    throw ValidationError("unknown technique id " + std::to_string(id));
  }
  return scenario_->techniques[it->second];
}

std::size_t ScenarioIndex::fault_position(int id) const {
  auto it = fault_pos_.find(id);
  if (it == fault_pos_.end()) {
    throw ValidationError("unknown fault id " + std::to_string(id));
  }
  return it->second;
}

std::span<const int> ScenarioIndex::ancestors(int fault_id) const {
  return ancestors_[fault_position(fault_id)];
}

}  // namespace qecon
