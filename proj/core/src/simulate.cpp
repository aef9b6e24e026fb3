#include "qecon/simulate.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "qecon/errors.hpp"
#include "qecon/rng.hpp"

namespace qecon {

SimOutcome simulate_once(const ScenarioIndex& index, const Program& program,
                         std::uint64_t seed) {
  const Scenario& scenario = index.scenario();
  const std::size_t n = scenario.faults.size();
  Rng rng(seed);

  enum class State : char { live, detected, screened };
  std::vector<State> state(n, State::live);

  SimOutcome out;
  for (const Application& app : program.applications) {
    if (app.effort.is_zero()) continue;
    const Technique& tech = index.technique(app.technique_id);
    out.direct += tech.setup_cost + tech.execution_cost_rate * app.effort.hours();

    // Draws go against the state at the start of the application: a fault
    // detected here does not screen its successors until the next one.
    std::vector<char> detected_now(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (state[i] != State::live) continue;
      const Fault& f = scenario.faults[i];
      const double theta = tech.difficulty.at(f.id)(app.effort);
      if (rng.bernoulli(1.0 - theta)) {
        detected_now[i] = 1;
        out.direct += tech.removal_cost.at(f.id);
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (detected_now[i]) state[i] = State::detected;
    }
    // Screening: a live fault whose transitive predecessor is gone is
    // removed too, without a removal cost.
    for (std::size_t i = 0; i < n; ++i) {
      if (state[i] != State::live) continue;
      for (int j : index.ancestors(scenario.faults[i].id)) {
        if (state[index.fault_position(j)] != State::live) {
          state[i] = State::screened;
          break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Fault& f = scenario.faults[i];
    // The same field-failure draw decides both branches, so the realized
    // field cost splits exactly between future and revenue.
    const bool fails = rng.bernoulli(f.failure_probability);
    if (!fails) continue;
    if (state[i] == State::live) {
      out.future += f.field_cost();
    } else {
      out.revenue += f.field_cost();
      if (state[i] == State::screened) out.screened += f.field_cost();
    }
  }
  return out;
}

namespace {

struct Moments {
  double mean = 0.0;
  double stderr_ = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  Moments m;
  if (n == 0) return m;
  double sum = 0.0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(n);
  if (n < 2) return m;  // stderr is 0 by convention for a single run
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  const double var = ss / static_cast<double>(n - 1);
  m.stderr_ = std::sqrt(var / static_cast<double>(n));
  return m;
}

}  // namespace

SimEstimate estimate(const Scenario& scenario, const Program& program,
                     std::uint64_t n, std::uint64_t seed, int threads) {
  if (n == 0) throw ValidationError("estimate requires at least one run");
  validate_program(program, scenario);
  const ScenarioIndex index(scenario);

  std::vector<double> direct(n), future(n), revenue(n), screened(n);
  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      const SimOutcome o = simulate_once(index, program, derive_seed(seed, k));
      direct[k] = o.direct;
      future[k] = o.future;
      revenue[k] = o.revenue;
      screened[k] = o.screened;
    }
  };

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
  if (workers <= 1) {
    run_range(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(run_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  // Reduction is sequential over the run index, so the estimate does not
  // depend on the number of workers.
  const Moments d = moments(direct);
  const Moments f = moments(future);
  const Moments r = moments(revenue);
  const Moments s = moments(screened);

  SimEstimate e;
  e.mean_direct = d.mean;
  e.mean_future = f.mean;
  e.mean_revenue = r.mean;
  e.mean_screened = s.mean;
  e.stderr_direct = d.stderr_;
  e.stderr_future = f.stderr_;
  e.stderr_revenue = r.stderr_;
  e.stderr_screened = s.stderr_;
  e.n = n;
  e.seed = seed;
  return e;
}

}  // namespace qecon
