#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qecon/difficulty.hpp"
#include "qecon/effort.hpp"

namespace qecon {

// Document types defects live in, ordered along the development pipeline:
// requirements -> design -> {code, test_spec}. Code and test specifications
// are parallel branches; defects never propagate between them.
enum class DocumentClass { requirements, design, code, test_spec };

inline constexpr DocumentClass kAllDocumentClasses[] = {
    DocumentClass::requirements, DocumentClass::design, DocumentClass::code,
    DocumentClass::test_spec};

int pipeline_rank(DocumentClass c);

/// Whether a defect in `pred` may be the predecessor of one in `succ`:
/// same class, or any strictly earlier pipeline stage.
bool can_precede(DocumentClass pred, DocumentClass succ);

std::string_view to_string(DocumentClass c);
std::optional<DocumentClass> document_class_from_string(std::string_view s);

struct Fault {
  int id = 0;
  DocumentClass doc_class = DocumentClass::code;
  /// Direct predecessor faults (the defects this one was derived from).
  /// Detection screening propagates transitively along these edges.
  std::vector<int> predecessors;
  double failure_probability = 0.0;  // chance the fault fails in the field
  double field_removal_cost = 0.0;
  double field_effect_cost = 0.0;

  double field_cost() const { return field_removal_cost + field_effect_cost; }
};

struct Technique {
  int id = 0;  // canonical encoding 0..6
  std::string name;
  double setup_cost = 0.0;
  double execution_cost_rate = 0.0;  // money per person-hour
  std::map<int, double> removal_cost;         // fault id -> in-house removal cost
  std::map<int, DifficultyCurve> difficulty;  // fault id -> non-detection curve
  std::set<DocumentClass> capable_classes;
};

/// The canonical names for technique ids 0..6.
std::string_view default_technique_name(int id);

struct Application {
  int technique_id = 0;
  Effort effort;  // zero effort means the application is skipped entirely
};

struct Program {
  std::vector<Application> applications;
};

struct Scenario {
  double labour_rate = 0.0;  // default execution cost rate, money per hour
  std::vector<Fault> faults;
  std::vector<Technique> techniques;
};

struct CostBreakdown {
  double direct = 0.0;
  double future = 0.0;
  double revenue = 0.0;
  double roi = 0.0;
};

/// Full structural validation; throws ValidationError naming the violated
/// rule and the offending identifier.
void validate_scenario(const Scenario& scenario);

/// Checks that every application references a technique of the scenario.
void validate_program(const Program& program, const Scenario& scenario);

/// Lookup tables and the transitive predecessor closure for one scenario.
/// Cheap to build, immutable afterwards, safe to share across threads.
class ScenarioIndex {
 public:
  explicit ScenarioIndex(const Scenario& scenario);

  const Scenario& scenario() const { return *scenario_; }
  const Fault& fault(int id) const;
  const Technique& technique(int id) const;
  std::size_t fault_position(int id) const;

  /// All transitive predecessors of a fault, sorted by id.
  std::span<const int> ancestors(int fault_id) const;

 private:
  const Scenario* scenario_;
  std::map<int, std::size_t> fault_pos_;
  std::map<int, std::size_t> technique_pos_;
  std::vector<std::vector<int>> ancestors_;
};

}  // namespace qecon
