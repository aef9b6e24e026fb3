#pragma once

#include <cstdint>

#include "qecon/scenario.hpp"

namespace qecon {

// Stochastic simulator of the detection process, used as an independent
// oracle for the analytical expectations. Per run: each application draws
// detection per live fault, detected faults and their transitive successors
// are removed, and afterwards every fault draws its field failure. Removed
// faults accrue their counterfactual field cost to revenue, so
// revenue + future equals the realized field-cost total exactly, run by run.

struct SimOutcome {
  double direct = 0.0;
  double future = 0.0;
  double revenue = 0.0;
  /// Portion of revenue from faults removed by predecessor screening rather
  /// than direct detection.
  double screened = 0.0;
};

struct SimEstimate {
  double mean_direct = 0.0;
  double mean_future = 0.0;
  double mean_revenue = 0.0;
  double mean_screened = 0.0;
  double stderr_direct = 0.0;
  double stderr_future = 0.0;
  double stderr_revenue = 0.0;
  double stderr_screened = 0.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

/// One sampled world. Deterministic in (scenario, program, seed).
SimOutcome simulate_once(const ScenarioIndex& index, const Program& program,
                         std::uint64_t seed);

/// n independent runs; run k uses derive_seed(seed, k), so the estimate is
/// reproducible and independent of execution order. threads <= 0 means one
/// worker per hardware thread.
SimEstimate estimate(const Scenario& scenario, const Program& program,
                     std::uint64_t n, std::uint64_t seed, int threads = 1);

}  // namespace qecon
