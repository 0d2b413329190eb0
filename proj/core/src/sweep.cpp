#include "ringcav/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "ringcav/angle.hpp"
#include "ringcav/errors.hpp"

namespace ringcav {

std::size_t resolve_worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kWorkersEnvVar); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    throw ConfigError(std::string(kWorkersEnvVar) + " must be a positive integer",
                      kWorkersEnvVar);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

bool SweepResult::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckOutcome& c) { return c.passed || !c.spec.gating; });
}

SweepResult run_parameter_sweep(std::string_view scenario, const ParamMap& base,
                                const std::string& parameter,
                                const std::vector<double>& grid, std::size_t workers) {
  if (grid.empty()) throw ConfigError("sweep grid is empty", "scenario.sweep.grid");
  if (parameter.empty()) throw ConfigError("sweep parameter missing", "scenario.sweep.param");
  // Fail on bad parameters before spawning workers.
  {
    ParamMap probe = base;
    probe[parameter] = format_double(grid.front());
    (void)make_scenario_config(scenario, probe);
  }
  SweepResult result;
  result.scenario = std::string(scenario);
  result.base_scenario = std::string(scenario);
  result.parameter = parameter;
  result.values = grid;
  result.reports.resize(grid.size());
  parallel_for(grid.size(), resolve_worker_count(workers), [&](std::size_t i) {
    ParamMap params = base;
    params[parameter] = format_double(grid[i]);
    auto report = run_protocol(scenario, params);
    result.reports[i] = std::move(report);
  });
  return result;
}

namespace {

void append_gate_checks(SweepResult& sweep) {
  double worst_closed = 0.0;
  double worst_strict = 0.0;
  bool any_closed = false;
  for (std::size_t i = 0; i < sweep.values.size(); ++i) {
    if (!(sweep.values[i] > thresholds::kGateDetuningOnset)) continue;
    any_closed = true;
    const double f = sweep.reports[i].target("psi1").max_fidelity;
    worst_closed = std::max(worst_closed, f);
    worst_strict = std::max(worst_strict, f);
  }
  if (!any_closed) return;
  CheckSpec gate;
  gate.name = "gate_closed_above_onset";
  gate.metric = MetricKind::TargetMaxFidelity;
  gate.target = "psi1";
  gate.op = Comparison::Less;
  gate.threshold = thresholds::kGateFidelity;
  sweep.checks.push_back({gate, worst_closed, compare(worst_closed, gate.op, gate.threshold)});
  CheckSpec strict = gate;
  strict.name = "gate_closed_above_onset_strict";
  strict.threshold = thresholds::kGateFidelityStrict;
  strict.gating = false;
  sweep.checks.push_back(
      {strict, worst_strict, compare(worst_strict, strict.op, strict.threshold)});
}

}  // namespace

SweepResult run_detuning_gate_sweep(const std::vector<double>& detunings, std::size_t workers,
                                    const ParamMap& base) {
  auto sweep = run_parameter_sweep(scenario_id::kTransfer, base, "delta_a", detunings, workers);
  sweep.scenario = std::string(scenario_id::kGateSweep);
  append_gate_checks(sweep);
  return sweep;
}

SweepResult stirap_detuning_scan(const std::vector<double>& grid, std::size_t workers,
                                 const ParamMap& base) {
  if (base.count("delta0") || base.count("delta1")) {
    throw ConfigError("stirap-scan sets delta0 and delta1 itself", "scenario.params");
  }
  if (grid.empty()) throw ConfigError("sweep grid is empty", "scenario.sweep.grid");
  SweepResult result;
  result.scenario = std::string(scenario_id::kStirapScan);
  result.base_scenario = std::string(scenario_id::kStirap);
  result.parameter = "delta";
  result.values = grid;
  result.reports.resize(grid.size());
  (void)make_scenario_config(scenario_id::kStirap, base);
  parallel_for(grid.size(), resolve_worker_count(workers), [&](std::size_t i) {
    ParamMap params = base;
    params["delta0"] = format_double(grid[i]);
    params["delta1"] = format_double(grid[i]);
    result.reports[i] = run_protocol(scenario_id::kStirap, params);
  });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (const auto& c : result.reports[i].checks) {
      if (c.spec.metric != MetricKind::TargetFinalFidelity) continue;
      auto outcome = c;
      outcome.spec.name = "delta_" + format_double(grid[i]) + "_" + c.spec.name;
      result.checks.push_back(outcome);
    }
  }
  return result;
}

SweepResult run_named_sweep(std::string_view scenario, const ParamMap& base,
                            std::string parameter, const std::vector<double>& grid,
                            std::size_t workers) {
  if (scenario == scenario_id::kGateSweep) {
    if (!parameter.empty() && parameter != "delta_a") {
      throw ConfigError("gate-sweep scans delta_a only", "scenario.sweep.param");
    }
    return run_detuning_gate_sweep(grid, workers, base);
  }
  if (scenario == scenario_id::kStirapScan) {
    if (!parameter.empty() && parameter != "delta") {
      throw ConfigError("stirap-scan scans delta only", "scenario.sweep.param");
    }
    return stirap_detuning_scan(grid, workers, base);
  }
  return run_parameter_sweep(scenario, base, parameter, grid, workers);
}

std::vector<double> default_sweep_grid(std::string_view scenario) {
  if (scenario == scenario_id::kGateSweep) return linspace(0.0, 15.0, 31);
  if (scenario == scenario_id::kStirapScan) return linspace(0.0, 20.0, 41);
  throw ConfigError("no default grid for scenario '" + std::string(scenario) + "'",
                    "scenario.sweep.grid");
}

}  // namespace ringcav
