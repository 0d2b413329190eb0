#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ringcav/protocols.hpp"

namespace ringcav {

/// Environment variable overriding the worker count of parallel sweeps.
inline constexpr const char* kWorkersEnvVar = "RINGCAV_WORKERS";

/// requested > 0 wins; otherwise RINGCAV_WORKERS, otherwise the hardware
/// concurrency (at least 1).
std::size_t resolve_worker_count(std::size_t requested = 0);

/// Runs body(i) for i in [0, count) on `workers` threads. Each index is
/// processed exactly once; results must be written by index. The first
/// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

struct SweepResult {
  std::string scenario;
  std::string base_scenario;
  std::string parameter;
  std::vector<double> values;
  std::vector<ScenarioReport> reports;
  std::vector<CheckOutcome> checks;

  bool passed() const noexcept;
};

/// Maps `parameter` of a built-in single-run scenario over `grid`. Output is
/// keyed by grid index and does not depend on the worker count.
SweepResult run_parameter_sweep(std::string_view scenario, const ParamMap& base,
                                const std::string& parameter,
                                const std::vector<double>& grid,
                                std::size_t workers = 0);

/// Maximum fidelity of (S2 + S3)/sqrt2 within g_c t = 10 versus the detuning
/// of spins 2 and 3. Gates on F_max < 1% for every Delta_a > 7.5 g_c and
/// reports the 0.1% level informationally.
SweepResult run_detuning_gate_sweep(const std::vector<double>& detunings,
                                    std::size_t workers = 0,
                                    const ParamMap& base = {});

/// Final STIRAP fidelity with Delta0 = Delta1 = delta over `grid`.
SweepResult stirap_detuning_scan(const std::vector<double>& grid,
                                 std::size_t workers = 0,
                                 const ParamMap& base = {});

/// Dispatches the two named sweeps (gate-sweep, stirap-scan) and the
/// generic form. `parameter` may be empty for the named sweeps.
SweepResult run_named_sweep(std::string_view scenario, const ParamMap& base,
                            std::string parameter, const std::vector<double>& grid,
                            std::size_t workers = 0);

/// Default grids: gate-sweep 0:15:31, stirap-scan 0:20:41.
std::vector<double> default_sweep_grid(std::string_view scenario);

}  // namespace ringcav
