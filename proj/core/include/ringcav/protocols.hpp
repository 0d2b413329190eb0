#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringcav/basis.hpp"
#include "ringcav/dynamics.hpp"
#include "ringcav/model.hpp"
#include "ringcav/state.hpp"

namespace ringcav {

/// Scenario parameters as written in a config file or on the command line.
/// Values are kept as text so angle literals ("pi/2") survive unchanged.
using ParamMap = std::map<std::string, std::string>;

double param_number(const ParamMap& params, const std::string& key, double fallback);
std::string param_text(const ParamMap& params, const std::string& key,
                       const std::string& fallback);

enum class Comparison { Less, LessEqual, Greater, GreaterEqual };

std::string_view comparison_symbol(Comparison op) noexcept;
Comparison parse_comparison(std::string_view symbol);
bool compare(double value, Comparison op, double threshold) noexcept;

enum class MetricKind {
  TargetMaxFidelity,    // max_t F(target)
  TargetFinalFidelity,  // F(target) at t_final
  MaxSpinPopulation,    // max_t sum_{m in spins} rho_mm
  MaxPhotonNumber,      // max_t n_mode
  MaxModeImbalance,     // max_t |n_cw - n_ccw|
  /// max_t of how far sum_{m in spins} rho_mm leaves [budget - n_photons, budget]
  GroupBudgetViolation,
  /// max_t population of basis states with two or more excited spins inside
  /// any one group
  MaxGroupDoubleOccupancy,
  /// F(target) - F(reference), both at the sample where F(target) peaks
  PeakFidelityMargin,
  MaxNormDeviation,
  /// Largest observable difference against a rerun at a higher Fock cutoff.
  /// Computed by run_protocol; not accepted in declared configurations.
  CutoffInsensitivity,
};

std::string_view metric_name(MetricKind kind) noexcept;
MetricKind parse_metric(std::string_view name);

/// A declared pass/fail condition: metric `op` threshold. Informational
/// checks (gating = false) are reported but do not fail the scenario.
struct CheckSpec {
  std::string name;
  MetricKind metric = MetricKind::TargetMaxFidelity;
  std::string target;
  std::string reference;
  std::vector<std::size_t> spins;
  std::vector<std::vector<std::size_t>> groups;
  CavityMode mode = CavityMode::Clockwise;
  double budget = 0.0;
  Comparison op = Comparison::GreaterEqual;
  double threshold = 0.0;
  bool gating = true;

  friend bool operator==(const CheckSpec&, const CheckSpec&) = default;
};

struct CheckOutcome {
  CheckSpec spec;
  double value = 0.0;
  bool passed = false;
};

struct TargetSpec {
  std::string name;
  std::vector<StateTerm> terms;

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

/// Declarative description of one run.
struct ScenarioConfig {
  std::string id = "custom";
  ParamMap params;
  SystemSpec spec = SystemSpec::uniform_chain(1, 0.0);
  BasisSpec basis = BasisSpec::single_excitation(1);
  std::vector<StateTerm> initial_state;
  std::vector<TargetSpec> targets;
  double t_final = 10.0;
  PropagatorSettings settings;
  std::vector<CheckSpec> checks;

  /// Throws ConfigError when the basis does not match the spin count, a
  /// pattern is not representable, or the initial state has zero norm.
  void validate() const;
};

struct TargetOutcome {
  std::string name;
  double max_fidelity = 0.0;
  double time_at_max = 0.0;
  double final_fidelity = 0.0;
};

struct ScenarioReport {
  std::string scenario;
  ScenarioConfig config;
  Trajectory trajectory;
  std::vector<TargetOutcome> targets;
  std::vector<CheckOutcome> checks;

  bool passed() const noexcept;
  const TargetOutcome& target(const std::string& name) const;
  const CheckOutcome& check(const std::string& name) const;
};

/// Propagates the configuration and evaluates its declared checks.
ScenarioReport run_scenario(const ScenarioConfig& config);

/// Stable identifiers of the built-in experiments.
namespace scenario_id {
inline constexpr std::string_view kTransport = "transport";
inline constexpr std::string_view kTransfer = "transfer";
inline constexpr std::string_view kGateSweep = "gate-sweep";
inline constexpr std::string_view kRemote6 = "remote6";
inline constexpr std::string_view kStirap = "stirap";
inline constexpr std::string_view kStirapScan = "stirap-scan";
inline constexpr std::string_view kMultiExcitation = "multi-exc";
}  // namespace scenario_id

/// All built-in identifiers, single runs and sweeps.
const std::vector<std::string>& builtin_scenarios();
bool is_builtin_scenario(std::string_view id);
bool is_sweep_scenario(std::string_view id);

/// Thresholds the built-in scenarios gate on.
namespace thresholds {
inline constexpr double kIsolation = 1e-8;
inline constexpr double kTransportSpread = 0.01;
inline constexpr double kTransferFidelity = 0.999;
inline constexpr double kGateFidelity = 0.01;
inline constexpr double kGateFidelityStrict = 0.001;
inline constexpr double kGateDetuningOnset = 7.5;
inline constexpr double kRemoteFidelity = 0.999;
inline constexpr double kRemoteLeakage = 1e-3;
inline constexpr double kStirapFidelity = 0.999;
inline constexpr double kStirapRobustFidelity = 0.995;
inline constexpr double kTwoExcitationFidelity = 0.99;
inline constexpr double kCutoffInsensitivity = 1e-10;
inline constexpr double kGroupBudgetTolerance = 1e-9;
inline constexpr double kNormPreservation = 1e-10;
}  // namespace thresholds

/// Builds the configuration of a built-in single-run scenario from its
/// parameters (missing ones take documented defaults). Throws ConfigError
/// for unknown ids or parameters, ProtocolNotApplicable for odd chains,
/// BasisError for a Fock cutoff below 2 in the two-excitation variant.
///
/// Parameters:
///   transport: n (4), dphi (pi/2), t_final (10)
///   transfer:  n (4), dphi (pi/2), theta (0), delta_a (0) on spins 2,3, t_final (10)
///   remote6:   delta_a (10) on spins 3,4, t_final (10)
///   stirap:    delta0 (10), delta1 (10), ramp_time (10)
///   multi-exc: variant (A|B), cutoff (2), t_final (10)
/// plus dt and stride for every scenario.
ScenarioConfig make_scenario_config(std::string_view id, const ParamMap& params = {});

/// Runs a built-in single-run scenario. The two-excitation variant adds a
/// second run at cutoff + 1 and a cutoff-insensitivity check.
ScenarioReport run_protocol(std::string_view id, const ParamMap& params = {});

ScenarioReport run_transport(double interval_phase, std::size_t spin_count = 4);
ScenarioReport run_entangled_transfer(double theta, double detuning = 0.0);
enum class MultiExcitationVariant { NonMaximal, TwoExcitation };
ScenarioReport run_nonmaximal_and_two_excitation(MultiExcitationVariant variant,
                                                 int cutoff = 2);
ScenarioReport run_remote_transfer_six_spins(double detuning = 10.0);
ScenarioReport run_stirap(double delta0, double delta1, double ramp_time = 10.0);

}  // namespace ringcav
