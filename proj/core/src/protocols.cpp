#include "ringcav/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "ringcav/angle.hpp"
#include "ringcav/errors.hpp"

namespace ringcav {

double param_number(const ParamMap& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    return parse_angle(it->second);
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), "scenario.params." + key);
  }
}

std::string param_text(const ParamMap& params, const std::string& key,
                       const std::string& fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::string_view comparison_symbol(Comparison op) noexcept {
  switch (op) {
    case Comparison::Less: return "<";
    case Comparison::LessEqual: return "<=";
    case Comparison::Greater: return ">";
    case Comparison::GreaterEqual: return ">=";
  }
  return "?";
}

Comparison parse_comparison(std::string_view symbol) {
  if (symbol == "<") return Comparison::Less;
  if (symbol == "<=") return Comparison::LessEqual;
  if (symbol == ">") return Comparison::Greater;
  if (symbol == ">=") return Comparison::GreaterEqual;
  throw ConfigError("unknown comparison '" + std::string(symbol) + "'");
}

bool compare(double value, Comparison op, double threshold) noexcept {
  switch (op) {
    case Comparison::Less: return value < threshold;
    case Comparison::LessEqual: return value <= threshold;
    case Comparison::Greater: return value > threshold;
    case Comparison::GreaterEqual: return value >= threshold;
  }
  return false;
}

namespace {

struct MetricName {
  MetricKind kind;
  std::string_view name;
};

constexpr MetricName kMetricNames[] = {
    {MetricKind::TargetMaxFidelity, "target_max_fidelity"},
    {MetricKind::TargetFinalFidelity, "target_final_fidelity"},
    {MetricKind::MaxSpinPopulation, "max_spin_population"},
    {MetricKind::MaxPhotonNumber, "max_photon_number"},
    {MetricKind::MaxModeImbalance, "max_mode_imbalance"},
    {MetricKind::GroupBudgetViolation, "group_budget_violation"},
    {MetricKind::MaxGroupDoubleOccupancy, "max_group_double_occupancy"},
    {MetricKind::PeakFidelityMargin, "peak_fidelity_margin"},
    {MetricKind::MaxNormDeviation, "max_norm_deviation"},
    {MetricKind::CutoffInsensitivity, "cutoff_insensitivity"},
};

}  // namespace

std::string_view metric_name(MetricKind kind) noexcept {
  for (const auto& entry : kMetricNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

MetricKind parse_metric(std::string_view name) {
  for (const auto& entry : kMetricNames) {
    if (entry.name == name) return entry.kind;
  }
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

void ScenarioConfig::validate() const {
  if (!(basis.spin_count() == spec.spin_count())) {
    throw ConfigError("basis spin count does not match the system", "basis");
  }
  if (initial_state.empty()) throw ConfigError("initial state has no terms", "initial_state");
  if (!std::isfinite(t_final) || t_final < 0.0) {
    throw ConfigError("t_final must be finite and non-negative", "simulation.t_final");
  }
  try {
    settings.validate();
    const auto raw = QuantumState::raw_amplitudes(basis, initial_state);
    if (!(raw.norm() > 0.0)) throw ConfigError("initial state has zero norm", "initial_state");
    std::set<std::string> names;
    for (const auto& target : targets) {
      if (!names.insert(target.name).second) {
        throw ConfigError("duplicate target name '" + target.name + "'", "targets");
      }
      if (!(QuantumState::raw_amplitudes(basis, target.terms).norm() > 0.0)) {
        throw ConfigError("target '" + target.name + "' has zero norm", "targets");
      }
    }
  } catch (const BasisError& e) {
    throw ConfigError(e.what(), "initial_state");
  } catch (const DomainError& e) {
    throw ConfigError(e.what(), "simulation");
  }
  for (const auto& check : checks) {
    if (check.metric == MetricKind::CutoffInsensitivity) {
      throw ConfigError("cutoff_insensitivity is computed by the protocol, not declared",
                        "scenario.checks");
    }
    const bool needs_target = check.metric == MetricKind::TargetMaxFidelity ||
                              check.metric == MetricKind::TargetFinalFidelity ||
                              check.metric == MetricKind::PeakFidelityMargin;
    auto known = [&](const std::string& name) {
      return std::any_of(targets.begin(), targets.end(),
                         [&](const TargetSpec& t) { return t.name == name; });
    };
    if (needs_target && !known(check.target)) {
      throw ConfigError("check '" + check.name + "' names unknown target '" + check.target + "'",
                        "scenario.checks");
    }
    if (check.metric == MetricKind::PeakFidelityMargin && !known(check.reference)) {
      throw ConfigError("check '" + check.name + "' names unknown reference '" +
                            check.reference + "'",
                        "scenario.checks");
    }
    for (auto m : check.spins) {
      if (m >= spec.spin_count()) {
        throw ConfigError("check '" + check.name + "' names spin " + std::to_string(m),
                          "scenario.checks");
      }
    }
    for (const auto& group : check.groups) {
      for (auto m : group) {
        if (m >= spec.spin_count()) {
          throw ConfigError("check '" + check.name + "' names spin " + std::to_string(m),
                            "scenario.checks");
        }
      }
    }
  }
}

bool ScenarioReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckOutcome& c) { return c.passed || !c.spec.gating; });
}

const TargetOutcome& ScenarioReport::target(const std::string& name) const {
  for (const auto& t : targets) {
    if (t.name == name) return t;
  }
  throw IndexError("report has no target '" + name + "'");
}

const CheckOutcome& ScenarioReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.spec.name == name) return c;
  }
  throw IndexError("report has no check '" + name + "'");
}

namespace {

RealVector double_occupancy_weights(const BasisSpec& basis,
                                    const std::vector<std::vector<std::size_t>>& groups) {
  RealVector weights = RealVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  if (basis.kind() != BasisKind::Fock) return weights;
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const auto label = basis.label_of(i);
    for (const auto& group : groups) {
      int excited = 0;
      for (auto m : group) excited += basis.spin_excited(label.spins, m) ? 1 : 0;
      if (excited >= 2) {
        weights(static_cast<Eigen::Index>(i)) = 1.0;
        break;
      }
    }
  }
  return weights;
}

double evaluate_metric(const CheckSpec& check, const Trajectory& traj,
                       const std::vector<TargetOutcome>& outcomes, std::size_t observable) {
  auto outcome = [&](const std::string& name) -> const TargetOutcome& {
    for (const auto& o : outcomes) {
      if (o.name == name) return o;
    }
    throw IndexError("no target '" + name + "'");
  };
  double worst = 0.0;
  switch (check.metric) {
    case MetricKind::TargetMaxFidelity: return outcome(check.target).max_fidelity;
    case MetricKind::TargetFinalFidelity: return outcome(check.target).final_fidelity;
    case MetricKind::MaxSpinPopulation:
      for (const auto& s : traj.samples) {
        double p = 0.0;
        for (auto m : check.spins) p += s.spin_populations[m];
        worst = std::max(worst, p);
      }
      return worst;
    case MetricKind::MaxPhotonNumber:
      for (const auto& s : traj.samples) {
        worst = std::max(worst, check.mode == CavityMode::Clockwise ? s.n_cw : s.n_ccw);
      }
      return worst;
    case MetricKind::MaxModeImbalance:
      for (const auto& s : traj.samples) worst = std::max(worst, std::abs(s.n_cw - s.n_ccw));
      return worst;
    case MetricKind::GroupBudgetViolation:
      for (const auto& s : traj.samples) {
        double p = 0.0;
        for (auto m : check.spins) p += s.spin_populations[m];
        const double photons = s.n_cw + s.n_ccw;
        worst = std::max({worst, p - check.budget, (check.budget - photons) - p});
      }
      return worst;
    case MetricKind::MaxGroupDoubleOccupancy:
      for (const auto& s : traj.samples) worst = std::max(worst, s.observables[observable]);
      return worst;
    case MetricKind::PeakFidelityMargin: {
      const auto a = traj.target_index(check.target);
      const auto b = traj.target_index(check.reference);
      const auto peak = max_fidelity_over_window(traj, a);
      for (const auto& s : traj.samples) {
        if (s.t == peak.time) return s.fidelities[a] - s.fidelities[b];
      }
      return 0.0;
    }
    case MetricKind::MaxNormDeviation: return traj.max_norm_deviation;
    case MetricKind::CutoffInsensitivity: break;
  }
  throw ConfigError("metric not evaluable from a single trajectory");
}

}  // namespace

ScenarioReport run_scenario(const ScenarioConfig& config) {
  config.validate();
  const auto initial = QuantumState::from_terms(config.basis, config.initial_state);
  std::vector<NamedState> targets;
  for (const auto& t : config.targets) {
    targets.push_back({t.name, QuantumState::from_terms(config.basis, t.terms)});
  }
  std::vector<DiagonalObservable> observables;
  std::vector<std::size_t> observable_of(config.checks.size(), 0);
  for (std::size_t c = 0; c < config.checks.size(); ++c) {
    const auto& check = config.checks[c];
    if (check.metric != MetricKind::MaxGroupDoubleOccupancy) continue;
    observable_of[c] = observables.size();
    observables.push_back({"double_occupancy:" + check.name,
                           double_occupancy_weights(config.basis, check.groups)});
  }

  auto evolution =
      evolve(initial, config.spec, config.settings, config.t_final, targets, observables);

  ScenarioReport report;
  report.scenario = config.id;
  report.config = config;
  report.trajectory = std::move(evolution.trajectory);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const auto peak = max_fidelity_over_window(report.trajectory, k);
    report.targets.push_back({targets[k].name, peak.value, peak.time,
                              report.trajectory.samples.back().fidelities[k]});
  }
  for (std::size_t c = 0; c < config.checks.size(); ++c) {
    const auto& check = config.checks[c];
    const double value = evaluate_metric(check, report.trajectory, report.targets, observable_of[c]);
    report.checks.push_back({check, value, compare(value, check.op, check.threshold)});
  }
  return report;
}

const std::vector<std::string>& builtin_scenarios() {
  static const std::vector<std::string> ids{
      std::string(scenario_id::kTransport), std::string(scenario_id::kTransfer),
      std::string(scenario_id::kGateSweep), std::string(scenario_id::kRemote6),
      std::string(scenario_id::kStirap),    std::string(scenario_id::kStirapScan),
      std::string(scenario_id::kMultiExcitation)};
  return ids;
}

bool is_builtin_scenario(std::string_view id) {
  const auto& ids = builtin_scenarios();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_sweep_scenario(std::string_view id) {
  return id == scenario_id::kGateSweep || id == scenario_id::kStirapScan;
}

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

StateTerm spin_term(Complex coefficient, std::vector<std::size_t> spins) {
  return StateTerm{coefficient, ExcitationPattern{std::move(spins), 0, 0}};
}

CheckSpec target_check(std::string name, MetricKind metric, std::string target, Comparison op,
                       double threshold, bool gating = true) {
  CheckSpec c;
  c.name = std::move(name);
  c.metric = metric;
  c.target = std::move(target);
  c.op = op;
  c.threshold = threshold;
  c.gating = gating;
  return c;
}

CheckSpec population_check(std::string name, std::vector<std::size_t> spins, Comparison op,
                           double threshold) {
  CheckSpec c;
  c.name = std::move(name);
  c.metric = MetricKind::MaxSpinPopulation;
  c.spins = std::move(spins);
  c.op = op;
  c.threshold = threshold;
  return c;
}

CheckSpec budget_check(std::string name, std::vector<std::size_t> spins, double budget) {
  CheckSpec c;
  c.name = std::move(name);
  c.metric = MetricKind::GroupBudgetViolation;
  c.spins = std::move(spins);
  c.budget = budget;
  c.op = Comparison::Less;
  c.threshold = thresholds::kGroupBudgetTolerance;
  return c;
}

CheckSpec norm_check() {
  CheckSpec c;
  c.name = "norm_preserved";
  c.metric = MetricKind::MaxNormDeviation;
  c.op = Comparison::Less;
  c.threshold = thresholds::kNormPreservation;
  return c;
}

void require_known_params(std::string_view id, const ParamMap& params,
                          std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : params) {
    const bool ok = key == "dt" || key == "stride" ||
                    std::find(known.begin(), known.end(), key) != known.end();
    if (!ok) {
      throw ConfigError("unknown parameter '" + key + "' for scenario " + std::string(id),
                        "scenario.params." + key);
    }
  }
}

PropagatorSettings settings_from(const ParamMap& params) {
  PropagatorSettings s;
  s.dt = param_number(params, "dt", s.dt);
  const double stride = param_number(params, "stride", static_cast<double>(s.stride));
  if (!(stride >= 1.0) || stride != std::floor(stride)) {
    throw ConfigError("stride must be a positive integer", "scenario.params.stride");
  }
  s.stride = static_cast<std::size_t>(stride);
  try {
    s.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what(), "scenario.params.dt");
  }
  return s;
}

std::size_t spin_count_param(const ParamMap& params, double fallback) {
  const double n = param_number(params, "n", fallback);
  if (!(n >= 1.0) || n != std::floor(n) || n > 62.0) {
    throw ConfigError("n must be a positive integer", "scenario.params.n");
  }
  return static_cast<std::size_t>(n);
}

std::vector<std::size_t> parity_spins(std::size_t n, std::size_t parity) {
  std::vector<std::size_t> out;
  for (std::size_t m = parity; m < n; m += 2) out.push_back(m);
  return out;
}

ScenarioConfig transport_config(const ParamMap& params) {
  require_known_params(scenario_id::kTransport, params, {"n", "dphi", "t_final"});
  const std::size_t n = spin_count_param(params, 4);
  const double dphi = param_number(params, "dphi", std::numbers::pi / 2);
  ScenarioConfig c;
  c.id = std::string(scenario_id::kTransport);
  c.params = params;
  c.spec = SystemSpec::uniform_chain(n, dphi);
  c.basis = BasisSpec::single_excitation(n);
  c.initial_state = {spin_term(1.0, {0})};
  c.t_final = param_number(params, "t_final", 10.0);
  c.settings = settings_from(params);
  if (is_odd_multiple_of_half_pi(dphi) && n > 1) {
    c.checks.push_back(population_check("odd_spins_isolated", parity_spins(n, 1),
                                        Comparison::Less, thresholds::kIsolation));
  } else if (is_multiple_of_pi(dphi)) {
    for (std::size_t m = 1; m < n; ++m) {
      c.checks.push_back(population_check("spin_" + std::to_string(m) + "_participates", {m},
                                          Comparison::Greater, thresholds::kTransportSpread));
    }
  }
  c.checks.push_back(norm_check());
  return c;
}

ScenarioConfig transfer_config(const ParamMap& params) {
  require_known_params(scenario_id::kTransfer, params,
                       {"n", "dphi", "theta", "delta_a", "t_final"});
  const std::size_t n = spin_count_param(params, 4);
  if (n % 2 != 0) {
    throw ProtocolNotApplicable(
        "entangled-state transfer needs an even number of spins; odd chains have "
        "non-degenerate polaritons");
  }
  if (n < 4) throw ConfigError("transfer needs at least four spins", "scenario.params.n");
  const double dphi = param_number(params, "dphi", std::numbers::pi / 2);
  const double theta = param_number(params, "theta", 0.0);
  const double delta = param_number(params, "delta_a", 0.0);
  const Complex phase = std::polar(1.0, theta);

  ScenarioConfig c;
  c.id = std::string(scenario_id::kTransfer);
  c.params = params;
  auto spins = SpinArray::uniform(n, dphi)
                   .with_detuning(2, DetuningSchedule::constant(delta))
                   .with_detuning(3, DetuningSchedule::constant(delta));
  c.spec = SystemSpec::with_collective_coupling(spins, CavityPair{}, 1.0);
  c.basis = BasisSpec::single_excitation(n);
  c.initial_state = {spin_term(kInvSqrt2, {0}), spin_term(kInvSqrt2 * phase, {1})};
  c.targets = {TargetSpec{"psi1", {spin_term(kInvSqrt2, {2}), spin_term(kInvSqrt2 * phase, {3})}}};
  c.t_final = param_number(params, "t_final", 10.0);
  c.settings = settings_from(params);

  if (delta == 0.0) {
    c.checks.push_back(target_check("psi1_max_fidelity", MetricKind::TargetMaxFidelity, "psi1",
                                    Comparison::GreaterEqual, thresholds::kTransferFidelity));
  } else if (delta > thresholds::kGateDetuningOnset) {
    c.checks.push_back(target_check("gate_closed", MetricKind::TargetMaxFidelity, "psi1",
                                    Comparison::Less, thresholds::kGateFidelity));
    c.checks.push_back(target_check("gate_closed_strict", MetricKind::TargetMaxFidelity,
                                    "psi1", Comparison::Less,
                                    thresholds::kGateFidelityStrict, false));
  }
  if (is_odd_multiple_of_half_pi(dphi)) {
    c.checks.push_back(budget_check("even_group_conserved", parity_spins(n, 0), 0.5));
    c.checks.push_back(budget_check("odd_group_conserved", parity_spins(n, 1), 0.5));
    if (delta == 0.0) {
      CheckSpec photons;
      photons.metric = MetricKind::MaxPhotonNumber;
      photons.op = Comparison::Less;
      photons.threshold = thresholds::kIsolation;
      if (std::abs(theta) <= 1e-12) {
        photons.name = "modes_balanced";
        photons.metric = MetricKind::MaxModeImbalance;
        c.checks.push_back(photons);
      } else if (std::abs(theta - std::numbers::pi / 2) <= 1e-12) {
        photons.name = "ccw_mode_silent";
        photons.mode = CavityMode::CounterClockwise;
        c.checks.push_back(photons);
      } else if (std::abs(theta + std::numbers::pi / 2) <= 1e-12) {
        photons.name = "cw_mode_silent";
        photons.mode = CavityMode::Clockwise;
        c.checks.push_back(photons);
      }
    }
  }
  c.checks.push_back(norm_check());
  return c;
}

ScenarioConfig remote6_config(const ParamMap& params) {
  require_known_params(scenario_id::kRemote6, params, {"delta_a", "t_final"});
  const double delta = param_number(params, "delta_a", 10.0);
  constexpr std::size_t n = 6;
  ScenarioConfig c;
  c.id = std::string(scenario_id::kRemote6);
  c.params = params;
  auto spins = SpinArray::uniform(n, std::numbers::pi / 2)
                   .with_detuning(3, DetuningSchedule::constant(delta))
                   .with_detuning(4, DetuningSchedule::constant(delta));
  c.spec = SystemSpec::with_collective_coupling(spins, CavityPair{}, 1.0);
  c.basis = BasisSpec::single_excitation(n);
  c.initial_state = {spin_term(kInvSqrt2, {1}), spin_term(kInvSqrt2, {2})};
  c.targets = {
      TargetSpec{"psi05_minus", {spin_term(kInvSqrt2, {0}), spin_term(-kInvSqrt2, {5})}},
      TargetSpec{"psi05_plus", {spin_term(kInvSqrt2, {0}), spin_term(kInvSqrt2, {5})}},
  };
  c.t_final = param_number(params, "t_final", 10.0);
  c.settings = settings_from(params);
  c.checks.push_back(target_check("psi05_max_fidelity", MetricKind::TargetMaxFidelity,
                                  "psi05_minus", Comparison::Greater,
                                  thresholds::kRemoteFidelity));
  c.checks.push_back(population_check("detuned_pair_frozen", {3, 4}, Comparison::Less,
                                      thresholds::kRemoteLeakage));
  CheckSpec sign = target_check("minus_sign_preferred", MetricKind::PeakFidelityMargin,
                                "psi05_minus", Comparison::Greater, 0.0);
  sign.reference = "psi05_plus";
  c.checks.push_back(sign);
  c.checks.push_back(norm_check());
  return c;
}

ScenarioConfig stirap_config(const ParamMap& params) {
  require_known_params(scenario_id::kStirap, params, {"delta0", "delta1", "ramp_time"});
  const double d0 = param_number(params, "delta0", 10.0);
  const double d1 = param_number(params, "delta1", 10.0);
  const double ramp = param_number(params, "ramp_time", 10.0);
  if (!(ramp > 0.0)) throw ConfigError("ramp_time must be positive", "scenario.params.ramp_time");
  constexpr std::size_t n = 4;
  ScenarioConfig c;
  c.id = std::string(scenario_id::kStirap);
  c.params = params;
  const auto source = DetuningSchedule::ramp(-d0, d0, ramp);
  const auto sink = DetuningSchedule::ramp(d1, -d1, ramp);
  auto spins = SpinArray::uniform(n, std::numbers::pi / 2)
                   .with_detunings({source, source, sink, sink});
  c.spec = SystemSpec::with_collective_coupling(spins, CavityPair{}, 1.0);
  c.basis = BasisSpec::single_excitation(n);
  c.initial_state = {spin_term(kInvSqrt2, {0}), spin_term(kInvSqrt2, {1})};
  c.targets = {TargetSpec{"psi1", {spin_term(kInvSqrt2, {2}), spin_term(kInvSqrt2, {3})}}};
  c.t_final = ramp;
  c.settings = settings_from(params);
  if (d0 == 10.0 && d1 == 10.0) {
    c.checks.push_back(target_check("psi1_final_fidelity", MetricKind::TargetFinalFidelity,
                                    "psi1", Comparison::Greater, thresholds::kStirapFidelity));
  } else if (d0 == 10.0 && d1 / d0 >= 0.5 - 1e-12 && d1 / d0 <= 1.4 + 1e-12) {
    c.checks.push_back(target_check("psi1_final_fidelity", MetricKind::TargetFinalFidelity,
                                    "psi1", Comparison::Greater,
                                    thresholds::kStirapRobustFidelity));
  }
  c.checks.push_back(budget_check("even_group_conserved", {0, 2}, 0.5));
  c.checks.push_back(budget_check("odd_group_conserved", {1, 3}, 0.5));
  c.checks.push_back(norm_check());
  return c;
}

ScenarioConfig multi_excitation_config(const ParamMap& params) {
  require_known_params(scenario_id::kMultiExcitation, params, {"variant", "cutoff", "t_final"});
  const std::string variant = param_text(params, "variant", "B");
  constexpr std::size_t n = 4;
  ScenarioConfig c;
  c.id = std::string(scenario_id::kMultiExcitation);
  c.params = params;
  c.spec = SystemSpec::uniform_chain(n, std::numbers::pi / 2);
  c.t_final = param_number(params, "t_final", 10.0);
  c.settings = settings_from(params);
  if (variant == "A") {
    c.basis = BasisSpec::single_excitation(n);
    c.initial_state = {spin_term(0.6, {0}), spin_term(0.8, {1})};
    c.targets = {TargetSpec{"psi1", {spin_term(0.6, {2}), spin_term(0.8, {3})}}};
    c.checks.push_back(target_check("psi1_max_fidelity", MetricKind::TargetMaxFidelity, "psi1",
                                    Comparison::GreaterEqual, thresholds::kTransferFidelity));
    c.checks.push_back(budget_check("even_group_conserved", {0, 2}, 0.36));
    c.checks.push_back(budget_check("odd_group_conserved", {1, 3}, 0.64));
  } else if (variant == "B") {
    const double cutoff = param_number(params, "cutoff", 2.0);
    if (cutoff != std::floor(cutoff)) {
      throw ConfigError("cutoff must be an integer", "scenario.params.cutoff");
    }
    if (cutoff < 2.0) {
      throw BasisError("two-excitation transfer needs a Fock cutoff of at least 2");
    }
    c.basis = BasisSpec::fock(n, static_cast<int>(cutoff));
    c.initial_state = {spin_term(1.0, {0, 1})};
    c.targets = {TargetSpec{"psi1", {spin_term(1.0, {2, 3})}}};
    c.checks.push_back(target_check("psi1_max_fidelity", MetricKind::TargetMaxFidelity, "psi1",
                                    Comparison::GreaterEqual,
                                    thresholds::kTwoExcitationFidelity));
    CheckSpec isolation;
    isolation.name = "groups_isolated";
    isolation.metric = MetricKind::MaxGroupDoubleOccupancy;
    isolation.groups = {{0, 2}, {1, 3}};
    isolation.op = Comparison::Less;
    isolation.threshold = thresholds::kIsolation;
    c.checks.push_back(isolation);
  } else {
    throw ConfigError("variant must be A or B", "scenario.params.variant");
  }
  c.checks.push_back(norm_check());
  return c;
}

}  // namespace

ScenarioConfig make_scenario_config(std::string_view id, const ParamMap& params) {
  if (id == scenario_id::kTransport) return transport_config(params);
  if (id == scenario_id::kTransfer) return transfer_config(params);
  if (id == scenario_id::kRemote6) return remote6_config(params);
  if (id == scenario_id::kStirap) return stirap_config(params);
  if (id == scenario_id::kMultiExcitation) return multi_excitation_config(params);
  if (is_sweep_scenario(id)) {
    throw ConfigError("scenario '" + std::string(id) + "' is a sweep, not a single run",
                      "scenario.id");
  }
  throw ConfigError("unknown scenario '" + std::string(id) + "'", "scenario.id");
}

ScenarioReport run_protocol(std::string_view id, const ParamMap& params) {
  const auto config = make_scenario_config(id, params);
  auto report = run_scenario(config);
  if (id == scenario_id::kMultiExcitation && config.basis.kind() == BasisKind::Fock) {
    ParamMap higher = params;
    higher["cutoff"] = std::to_string(config.basis.cutoff() + 1);
    const auto rerun = run_scenario(make_scenario_config(id, higher));
    CheckSpec spec;
    spec.name = "cutoff_insensitive";
    spec.metric = MetricKind::CutoffInsensitivity;
    spec.op = Comparison::Less;
    spec.threshold = thresholds::kCutoffInsensitivity;
    const double diff = max_observable_difference(report.trajectory, rerun.trajectory);
    report.checks.push_back({spec, diff, compare(diff, spec.op, spec.threshold)});
  }
  return report;
}

ScenarioReport run_transport(double interval_phase, std::size_t spin_count) {
  return run_protocol(scenario_id::kTransport,
                      {{"n", std::to_string(spin_count)}, {"dphi", format_double(interval_phase)}});
}

ScenarioReport run_entangled_transfer(double theta, double detuning) {
  return run_protocol(scenario_id::kTransfer,
                      {{"theta", format_double(theta)}, {"delta_a", format_double(detuning)}});
}

ScenarioReport run_nonmaximal_and_two_excitation(MultiExcitationVariant variant, int cutoff) {
  ParamMap params{{"variant", variant == MultiExcitationVariant::NonMaximal ? "A" : "B"}};
  if (variant == MultiExcitationVariant::TwoExcitation) params["cutoff"] = std::to_string(cutoff);
  return run_protocol(scenario_id::kMultiExcitation, params);
}

ScenarioReport run_remote_transfer_six_spins(double detuning) {
  return run_protocol(scenario_id::kRemote6, {{"delta_a", format_double(detuning)}});
}

ScenarioReport run_stirap(double delta0, double delta1, double ramp_time) {
  return run_protocol(scenario_id::kStirap, {{"delta0", format_double(delta0)},
                                             {"delta1", format_double(delta1)},
                                             {"ramp_time", format_double(ramp_time)}});
}

}  // namespace ringcav
