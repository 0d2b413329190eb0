#include "ringcav/config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"
#include "ringcav/angle.hpp"
#include "ringcav/errors.hpp"

namespace ringcav {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string join_path(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string index_path(const std::string& parent, std::size_t i) {
  return parent + "[" + std::to_string(i) + "]";
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(path + ": " + message, path);
}

// Strict view of a JSON object: every key must be consumed.
class Section {
 public:
  Section(const json& value, std::string path) : value_(value), path_(std::move(path)) {
    if (!value_.is_object()) fail(path_, "expected an object");
  }

  bool has(const std::string& key) const { return value_.contains(key); }

  const json* optional(const std::string& key) {
    used_.insert(key);
    const auto it = value_.find(key);
    return it == value_.end() ? nullptr : &*it;
  }

  const json& required(const std::string& key) {
    const json* v = optional(key);
    if (v == nullptr) fail(path(key), "required key missing");
    return *v;
  }

  std::string path(const std::string& key) const { return join_path(path_, key); }
  const std::string& path() const { return path_; }

  void finish() const {
    for (const auto& [key, value] : value_.items()) {
      if (!used_.count(key)) fail(path(key), "unknown key '" + key + "'");
    }
  }

 private:
  const json& value_;
  std::string path_;
  std::set<std::string> used_;
};

double read_real(const json& v, const std::string& path) {
  double out = 0.0;
  if (v.is_number()) {
    out = v.get<double>();
  } else if (v.is_string()) {
    try {
      out = parse_angle(v.get<std::string>());
    } catch (const ConfigError& e) {
      fail(path, e.what());
    }
  } else {
    fail(path, "expected a number or an angle literal");
  }
  if (!std::isfinite(out)) fail(path, "value must be finite");
  return out;
}

std::size_t read_index(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(path, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

bool read_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

std::string read_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<std::size_t> read_indices(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_index(v[i], index_path(path, i)));
  return out;
}

std::string param_value_text(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return format_double(v.get<double>());
  fail(path, "parameter values must be numbers or strings");
}

// Unit conversion applied while reading. With g_c units it is the identity.
struct Units {
  bool gc_units = true;
  double gc = 1.0;

  double frequency(double value) const { return gc_units ? value : value / gc; }
  double time(double value) const { return gc_units ? value : value * gc; }
};

Complex read_coefficient(const json& v, const std::string& path) {
  if (v.is_array()) {
    if (v.size() != 2) fail(path, "complex coefficient is [re, im]");
    return {read_real(v[0], index_path(path, 0)), read_real(v[1], index_path(path, 1))};
  }
  return {read_real(v, path), 0.0};
}

std::vector<StateTerm> read_terms(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a non-empty array of terms");
  std::vector<StateTerm> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Section s(v[i], index_path(path, i));
    StateTerm term;
    term.coefficient = read_coefficient(s.required("coeff"), s.path("coeff"));
    if (const json* spins = s.optional("spins")) term.pattern.spins = read_indices(*spins, s.path("spins"));
    if (const json* n = s.optional("n_cw")) term.pattern.n_cw = static_cast<int>(read_index(*n, s.path("n_cw")));
    if (const json* n = s.optional("n_ccw")) term.pattern.n_ccw = static_cast<int>(read_index(*n, s.path("n_ccw")));
    s.finish();
    terms.push_back(std::move(term));
  }
  return terms;
}

DetuningSchedule read_schedule_body(Section& s, const Units& units) {
  const json* constant = s.optional("constant");
  const json* ramp = s.optional("ramp");
  const json* segments = s.optional("segments");
  const int forms = (constant != nullptr) + (ramp != nullptr) + (segments != nullptr);
  if (forms != 1) fail(s.path(), "give exactly one of constant, ramp, segments");
  try {
    if (constant != nullptr) {
      return DetuningSchedule::constant(units.frequency(read_real(*constant, s.path("constant"))));
    }
    if (ramp != nullptr) {
      Section r(*ramp, s.path("ramp"));
      const double from = units.frequency(read_real(r.required("from"), r.path("from")));
      const double to = units.frequency(read_real(r.required("to"), r.path("to")));
      const double duration = units.time(read_real(r.required("duration"), r.path("duration")));
      r.finish();
      return DetuningSchedule::ramp(from, to, duration);
    }
    if (!segments->is_array()) fail(s.path("segments"), "expected an array");
    std::vector<DetuningSegment> pieces;
    for (std::size_t i = 0; i < segments->size(); ++i) {
      Section p((*segments)[i], index_path(s.path("segments"), i));
      DetuningSegment seg;
      seg.t_start = units.time(read_real(p.required("t_start"), p.path("t_start")));
      const json& end = p.required("t_end");
      seg.t_end = end.is_null() ? std::numeric_limits<double>::infinity()
                                : units.time(read_real(end, p.path("t_end")));
      seg.value_start = units.frequency(read_real(p.required("from"), p.path("from")));
      seg.value_end = units.frequency(read_real(p.required("to"), p.path("to")));
      if (const json* step = p.optional("step")) seg.step = read_bool(*step, p.path("step"));
      p.finish();
      pieces.push_back(seg);
    }
    return DetuningSchedule(std::move(pieces));
  } catch (const ScheduleDomainError& e) {
    fail(s.path(), e.what());
  }
}

CheckSpec read_check(const json& v, const std::string& path) {
  Section s(v, path);
  CheckSpec c;
  c.name = read_string(s.required("name"), s.path("name"));
  try {
    c.metric = parse_metric(read_string(s.required("metric"), s.path("metric")));
    c.op = parse_comparison(read_string(s.required("op"), s.path("op")));
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
  c.threshold = read_real(s.required("threshold"), s.path("threshold"));
  if (const json* t = s.optional("target")) c.target = read_string(*t, s.path("target"));
  if (const json* r = s.optional("reference")) c.reference = read_string(*r, s.path("reference"));
  if (const json* sp = s.optional("spins")) c.spins = read_indices(*sp, s.path("spins"));
  if (const json* g = s.optional("groups")) {
    if (!g->is_array()) fail(s.path("groups"), "expected an array of index arrays");
    for (std::size_t i = 0; i < g->size(); ++i) {
      c.groups.push_back(read_indices((*g)[i], index_path(s.path("groups"), i)));
    }
  }
  if (const json* m = s.optional("mode")) {
    const auto label = read_string(*m, s.path("mode"));
    if (label == "cw") {
      c.mode = CavityMode::Clockwise;
    } else if (label == "ccw") {
      c.mode = CavityMode::CounterClockwise;
    } else {
      fail(s.path("mode"), "expected cw or ccw");
    }
  }
  if (const json* b = s.optional("budget")) c.budget = read_real(*b, s.path("budget"));
  if (const json* g = s.optional("gating")) c.gating = read_bool(*g, s.path("gating"));
  s.finish();
  return c;
}

void read_params(const json& v, const std::string& path, ParamMap& out) {
  Section s(v, path);
  for (const auto& [key, value] : v.items()) {
    out[key] = param_value_text(*s.optional(key), s.path(key));
  }
  s.finish();
}

// Parameters that carry units, for SI conversion of built-in runs.
bool is_frequency_param(const std::string& key) {
  return key == "delta_a" || key == "delta0" || key == "delta1";
}
bool is_time_param(const std::string& key) {
  return key == "t_final" || key == "ramp_time" || key == "dt";
}

struct DefaultParam {
  std::string_view scenario;
  std::string_view key;
  std::string_view value;
};

constexpr DefaultParam kDefaults[] = {
    {"transport", "n", "4"},        {"transport", "dphi", "pi/2"},
    {"transport", "t_final", "10"}, {"transfer", "n", "4"},
    {"transfer", "dphi", "pi/2"},   {"transfer", "theta", "0"},
    {"transfer", "delta_a", "0"},   {"transfer", "t_final", "10"},
    {"remote6", "delta_a", "10"},   {"remote6", "t_final", "10"},
    {"stirap", "delta0", "10"},     {"stirap", "delta1", "10"},
    {"stirap", "ramp_time", "10"},  {"multi-exc", "variant", "B"},
    {"multi-exc", "t_final", "10"},
};

std::string_view base_of(std::string_view scenario) {
  if (scenario == scenario_id::kGateSweep) return scenario_id::kTransfer;
  if (scenario == scenario_id::kStirapScan) return scenario_id::kStirap;
  return scenario;
}

void record_defaults(ConfigDocument& doc) {
  const auto base = base_of(doc.scenario);
  for (const auto& d : kDefaults) {
    if (d.scenario != base || doc.params.count(std::string(d.key))) continue;
    if (base == scenario_id::kStirap && doc.scenario == scenario_id::kStirapScan &&
        (d.key == "delta0" || d.key == "delta1")) {
      continue;
    }
    if (doc.scenario == scenario_id::kGateSweep && d.key == "delta_a") continue;
    doc.defaults_applied.push_back("scenario.params." + std::string(d.key) + " = " +
                                   std::string(d.value));
  }
  if (base == scenario_id::kMultiExcitation && param_text(doc.params, "variant", "B") == "B" &&
      !doc.params.count("cutoff")) {
    doc.defaults_applied.push_back("scenario.params.cutoff = 2");
  }
  const PropagatorSettings defaults;
  if (!doc.params.count("dt")) {
    doc.defaults_applied.push_back("simulation.dt = " + format_double(defaults.dt));
  }
  if (!doc.params.count("stride")) {
    doc.defaults_applied.push_back("simulation.stride = " + std::to_string(defaults.stride));
  }
}

void read_simulation(Section& sim, const Units& units, ParamMap& params) {
  if (const json* dt = sim.optional("dt")) {
    params["dt"] = format_double(units.time(read_real(*dt, sim.path("dt"))));
  }
  if (const json* stride = sim.optional("stride")) {
    params["stride"] = std::to_string(read_index(*stride, sim.path("stride")));
  }
  if (const json* t = sim.optional("t_final")) {
    params["t_final"] = format_double(units.time(read_real(*t, sim.path("t_final"))));
  }
  sim.finish();
}

Units read_units(Section& system) {
  Units units;
  units.gc_units = read_bool(system.required("g_c_units"), system.path("g_c_units"));
  return units;
}

ScenarioConfig read_explicit(const json& root, ConfigDocument& doc) {
  ScenarioConfig config;
  Section system(root.at("system"), "system");
  Units units = read_units(system);

  std::vector<double> phases;
  const json* phase_list = system.optional("phases");
  const json* n = system.optional("n");
  const json* dphi = system.optional("dphi");
  if (phase_list != nullptr) {
    if (n != nullptr || dphi != nullptr) fail("system.phases", "give phases or n/dphi, not both");
    if (!phase_list->is_array() || phase_list->empty()) {
      fail("system.phases", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < phase_list->size(); ++i) {
      phases.push_back(read_real((*phase_list)[i], index_path("system.phases", i)));
    }
  } else {
    if (n == nullptr) fail("system.n", "required key missing (or give system.phases)");
    const std::size_t count = read_index(*n, "system.n");
    if (count == 0) fail("system.n", "need at least one spin");
    double step = 0.0;
    if (dphi != nullptr) {
      step = read_real(*dphi, "system.dphi");
    } else {
      doc.defaults_applied.push_back("system.dphi = 0");
    }
    for (std::size_t m = 0; m < count; ++m) phases.push_back(static_cast<double>(m) * step);
  }
  const std::size_t spin_count = phases.size();

  const json* g = system.optional("g");
  const json* gc = system.optional("g_c");
  if (g != nullptr && gc != nullptr) fail("system.g", "give g or g_c, not both");
  double coupling = 0.0;
  if (g != nullptr) {
    coupling = read_real(*g, "system.g");
    units.gc = coupling * std::sqrt(static_cast<double>(spin_count));
  } else if (gc != nullptr) {
    units.gc = read_real(*gc, "system.g_c");
  } else {
    units.gc = 1.0;
    doc.defaults_applied.push_back("system.g_c = 1");
  }
  if (!units.gc_units && !(units.gc > 0.0)) {
    fail("system.g_c_units", "SI units need a positive coupling to convert by");
  }
  if (units.gc_units) {
    if (g == nullptr) coupling = units.gc / std::sqrt(static_cast<double>(spin_count));
  } else {
    coupling = (g != nullptr ? coupling : units.gc / std::sqrt(static_cast<double>(spin_count))) /
               units.gc;
  }
  double omega_a = 0.0;
  double omega_c = 0.0;
  if (const json* w = system.optional("omega_a")) omega_a = units.frequency(read_real(*w, "system.omega_a"));
  if (const json* w = system.optional("omega_c")) omega_c = units.frequency(read_real(*w, "system.omega_c"));
  system.finish();

  std::vector<DetuningSchedule> detunings(spin_count);
  if (const json* schedules = root.contains("schedules") ? &root.at("schedules") : nullptr) {
    if (!schedules->is_array()) fail("schedules", "expected an array");
    std::vector<bool> assigned(spin_count, false);
    for (std::size_t i = 0; i < schedules->size(); ++i) {
      Section s((*schedules)[i], index_path("schedules", i));
      const auto spins = read_indices(s.required("spins"), s.path("spins"));
      const auto schedule = read_schedule_body(s, units);
      s.finish();
      for (auto m : spins) {
        if (m >= spin_count) fail(s.path("spins"), "spin " + std::to_string(m) + " out of range");
        if (assigned[m]) fail(s.path("spins"), "spin " + std::to_string(m) + " scheduled twice");
        assigned[m] = true;
        detunings[m] = schedule;
      }
    }
  }
  try {
    config.spec = SystemSpec(SpinArray(phases, omega_a, detunings), CavityPair{omega_c}, coupling);
  } catch (const DomainError& e) {
    fail("system", e.what());
  }

  Section basis(root.at("basis"), "basis");
  const auto kind = read_string(basis.required("kind"), "basis.kind");
  if (kind == "single") {
    config.basis = BasisSpec::single_excitation(spin_count);
  } else if (kind == "fock") {
    int cutoff = 2;
    if (const json* c = basis.optional("cutoff")) {
      cutoff = static_cast<int>(read_index(*c, "basis.cutoff"));
    } else {
      doc.defaults_applied.push_back("basis.cutoff = 2");
    }
    std::size_t limit = std::size_t{1} << 20;
    if (const json* d = basis.optional("max_dimension")) limit = read_index(*d, "basis.max_dimension");
    try {
      config.basis = BasisSpec::fock(spin_count, cutoff, limit);
    } catch (const BasisError& e) {
      fail("basis", e.what());
    }
  } else {
    fail("basis.kind", "expected single or fock");
  }
  basis.finish();

  config.initial_state = read_terms(root.at("initial_state"), "initial_state");
  if (root.contains("targets")) {
    const json& targets = root.at("targets");
    if (!targets.is_array()) fail("targets", "expected an array");
    for (std::size_t i = 0; i < targets.size(); ++i) {
      Section t(targets[i], index_path("targets", i));
      TargetSpec spec;
      spec.name = read_string(t.required("name"), t.path("name"));
      spec.terms = read_terms(t.required("terms"), t.path("terms"));
      t.finish();
      config.targets.push_back(std::move(spec));
    }
  }

  Section sim(root.at("simulation"), "simulation");
  ParamMap sim_params;
  read_simulation(sim, units, sim_params);
  const PropagatorSettings defaults;
  if (!sim_params.count("dt")) doc.defaults_applied.push_back("simulation.dt = " + format_double(defaults.dt));
  if (!sim_params.count("stride")) {
    doc.defaults_applied.push_back("simulation.stride = " + std::to_string(defaults.stride));
  }
  if (!sim_params.count("t_final")) fail("simulation.t_final", "required key missing");
  config.settings.dt = param_number(sim_params, "dt", defaults.dt);
  config.settings.stride =
      static_cast<std::size_t>(param_number(sim_params, "stride", static_cast<double>(defaults.stride)));
  config.t_final = param_number(sim_params, "t_final", 10.0);

  if (root.contains("scenario")) {
    Section sc(root.at("scenario"), "scenario");
    if (const json* id = sc.optional("id")) config.id = read_string(*id, "scenario.id");
    if (const json* p = sc.optional("params")) read_params(*p, "scenario.params", config.params);
    if (const json* checks = sc.optional("checks")) {
      if (!checks->is_array()) fail("scenario.checks", "expected an array");
      for (std::size_t i = 0; i < checks->size(); ++i) {
        config.checks.push_back(read_check((*checks)[i], index_path("scenario.checks", i)));
      }
    }
    sc.finish();
  }

  // Normalization of the hand-written initial state.
  ComplexVector raw;
  try {
    raw = QuantumState::raw_amplitudes(config.basis, config.initial_state);
  } catch (const BasisError& e) {
    fail("initial_state", e.what());
  }
  const double norm = raw.norm();
  const double deviation = std::abs(norm - 1.0);
  if (deviation > kAutoRenormalizeLimit) {
    throw NormalizationError("initial_state: norm " + format_double(norm) +
                             " deviates from 1 by more than " +
                             format_double(kAutoRenormalizeLimit));
  }
  if (deviation > QuantumState::kNormTolerance) {
    for (auto& term : config.initial_state) term.coefficient /= norm;
    doc.warnings.push_back("initial_state renormalized (norm was " + format_double(norm) + ")");
  }
  config.validate();
  return config;
}

void compute_line_column(std::string_view text, std::size_t byte, std::size_t& line,
                         std::size_t& column) {
  line = 1;
  column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

}  // namespace

ConfigDocument parse_config_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 0;
    std::size_t column = 0;
    compute_line_column(text, e.byte, line, column);
    throw ConfigError("syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(column),
                      "", line, column);
  }
  if (!root.is_object()) throw ConfigError("configuration must be a JSON object", "", 1, 1);

  static const std::set<std::string> kSections{"system", "basis", "initial_state", "targets",
                                               "schedules", "simulation", "scenario"};
  for (const auto& [key, value] : root.items()) {
    if (!kSections.count(key)) fail(key, "unknown key '" + key + "'");
  }

  ConfigDocument doc;
  const bool is_explicit = root.contains("basis") || root.contains("initial_state");
  if (is_explicit) {
    for (const char* key : {"system", "basis", "initial_state", "simulation"}) {
      if (!root.contains(key)) fail(key, "required section missing");
    }
    auto config = read_explicit(root, doc);
    doc.scenario = config.id;
    doc.params = config.params;
    doc.explicit_config = std::move(config);
    return doc;
  }

  for (const char* key : {"targets", "schedules"}) {
    if (root.contains(key)) fail(key, "only valid together with basis and initial_state");
  }
  if (!root.contains("scenario")) fail("scenario", "required section missing");

  Units units;
  if (root.contains("system")) {
    Section system(root.at("system"), "system");
    units = read_units(system);
    if (const json* gc = system.optional("g_c")) units.gc = read_real(*gc, "system.g_c");
    system.finish();
    if (!units.gc_units && !(units.gc > 0.0)) {
      fail("system.g_c", "SI units need the collective coupling in rad/s");
    }
  } else {
    doc.defaults_applied.push_back("system.g_c_units = true");
  }

  Section sc(root.at("scenario"), "scenario");
  doc.scenario = read_string(sc.required("id"), "scenario.id");
  if (!is_builtin_scenario(doc.scenario) && doc.scenario != "spectrum") {
    fail("scenario.id", "unknown scenario '" + doc.scenario + "'");
  }
  if (const json* p = sc.optional("params")) read_params(*p, "scenario.params", doc.params);
  if (const json* sweep = sc.optional("sweep")) {
    Section sw(*sweep, "scenario.sweep");
    if (const json* param = sw.optional("param")) doc.sweep_parameter = read_string(*param, "scenario.sweep.param");
    if (const json* grid = sw.optional("grid")) {
      doc.sweep_grid = read_string(*grid, "scenario.sweep.grid");
      try {
        (void)parse_grid(*doc.sweep_grid);
      } catch (const ConfigError& e) {
        fail("scenario.sweep.grid", e.what());
      }
    }
    sw.finish();
  }
  if (sc.has("checks")) fail("scenario.checks", "built-in scenarios carry their own checks");
  sc.finish();

  if (root.contains("simulation")) {
    Section sim(root.at("simulation"), "simulation");
    ParamMap sim_params;
    read_simulation(sim, Units{}, sim_params);
    for (const auto& [key, value] : sim_params) {
      if (doc.params.count(key)) {
        fail("simulation." + key, "also given as scenario.params." + key);
      }
      doc.params[key] = value;
    }
  }
  if (!units.gc_units) {
    for (auto& [key, value] : doc.params) {
      const std::string path = "scenario.params." + key;
      if (is_frequency_param(key)) value = format_double(units.frequency(read_real(value, path)));
      if (is_time_param(key)) value = format_double(units.time(read_real(value, path)));
    }
  }
  if (doc.scenario != "spectrum") record_defaults(doc);
  return doc;
}

ConfigDocument builtin_document(std::string scenario, ParamMap params) {
  if (!is_builtin_scenario(scenario) && scenario != "spectrum") {
    fail("scenario.id", "unknown scenario '" + scenario + "'");
  }
  ConfigDocument doc;
  doc.scenario = std::move(scenario);
  doc.params = std::move(params);
  doc.defaults_applied.push_back("system.g_c_units = true");
  if (doc.scenario != "spectrum") record_defaults(doc);
  return doc;
}

void apply_overrides(ConfigDocument& document, const ParamMap& overrides) {
  if (overrides.empty()) return;
  auto drop_default = [&](const std::string& prefix) {
    auto& d = document.defaults_applied;
    d.erase(std::remove_if(d.begin(), d.end(),
                           [&](const std::string& line) { return line.rfind(prefix, 0) == 0; }),
            d.end());
  };
  if (document.explicit_config) {
    auto& config = *document.explicit_config;
    for (const auto& [key, value] : overrides) {
      const std::string path = "simulation." + key;
      if (key == "dt") {
        config.settings.dt = read_real(value, path);
      } else if (key == "stride") {
        const double stride = read_real(value, path);
        if (!(stride >= 1.0) || stride != std::floor(stride)) fail(path, "expected a positive integer");
        config.settings.stride = static_cast<std::size_t>(stride);
      } else if (key == "t_final") {
        config.t_final = read_real(value, path);
      } else {
        fail("scenario.params." + key, "not applicable to an explicit configuration");
      }
      drop_default(path + " ");
    }
    config.validate();
    return;
  }
  for (const auto& [key, value] : overrides) document.params[key] = value;
  drop_default("scenario.params.");
  drop_default("simulation.");
  if (document.scenario != "spectrum") record_defaults(document);
}

ScenarioConfig resolve_scenario(const ConfigDocument& document) {
  if (document.explicit_config) return *document.explicit_config;
  if (is_sweep_scenario(document.scenario) || document.scenario == "spectrum") {
    throw ConfigError("scenario '" + document.scenario + "' is not a single run", "scenario.id");
  }
  return make_scenario_config(document.scenario, document.params);
}

ScenarioConfig parse_config(std::string_view text) {
  return resolve_scenario(parse_config_document(text));
}

namespace {

ordered_json coefficient_json(Complex c) {
  if (c.imag() == 0.0) return c.real();
  return ordered_json::array({c.real(), c.imag()});
}

ordered_json terms_json(const std::vector<StateTerm>& terms) {
  ordered_json out = ordered_json::array();
  for (const auto& t : terms) {
    ordered_json term;
    term["coeff"] = coefficient_json(t.coefficient);
    term["spins"] = t.pattern.spins;
    if (t.pattern.n_cw != 0) term["n_cw"] = t.pattern.n_cw;
    if (t.pattern.n_ccw != 0) term["n_ccw"] = t.pattern.n_ccw;
    out.push_back(std::move(term));
  }
  return out;
}

ordered_json real_json(double v) {
  if (std::isinf(v)) return nullptr;
  return v;
}

}  // namespace

std::string config_to_json(const ScenarioConfig& config) {
  const auto& spec = config.spec;
  ordered_json root;
  ordered_json system;
  system["g_c_units"] = true;
  system["phases"] = spec.spins().phases();
  system["g"] = spec.coupling();
  system["omega_a"] = spec.spins().base_frequency();
  system["omega_c"] = spec.cavity().frequency;
  root["system"] = std::move(system);

  ordered_json basis;
  basis["kind"] = std::string(basis_kind_name(config.basis.kind()));
  if (config.basis.kind() == BasisKind::Fock) basis["cutoff"] = config.basis.cutoff();
  root["basis"] = std::move(basis);

  root["initial_state"] = terms_json(config.initial_state);
  ordered_json targets = ordered_json::array();
  for (const auto& t : config.targets) {
    ordered_json target;
    target["name"] = t.name;
    target["terms"] = terms_json(t.terms);
    targets.push_back(std::move(target));
  }
  root["targets"] = std::move(targets);

  ordered_json schedules = ordered_json::array();
  const DetuningSchedule zero;
  for (std::size_t m = 0; m < spec.spin_count(); ++m) {
    const auto& schedule = spec.spins().detuning(m);
    if (schedule == zero) continue;
    ordered_json entry;
    entry["spins"] = {m};
    ordered_json segments = ordered_json::array();
    for (const auto& s : schedule.segments()) {
      ordered_json seg;
      seg["t_start"] = s.t_start;
      seg["t_end"] = real_json(s.t_end);
      seg["from"] = s.value_start;
      seg["to"] = s.value_end;
      if (s.step) seg["step"] = true;
      segments.push_back(std::move(seg));
    }
    entry["segments"] = std::move(segments);
    schedules.push_back(std::move(entry));
  }
  root["schedules"] = std::move(schedules);

  ordered_json sim;
  sim["dt"] = config.settings.dt;
  sim["stride"] = config.settings.stride;
  sim["t_final"] = config.t_final;
  root["simulation"] = std::move(sim);

  ordered_json scenario;
  scenario["id"] = config.id;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : config.params) params[key] = value;
  scenario["params"] = std::move(params);
  ordered_json checks = ordered_json::array();
  for (const auto& c : config.checks) {
    if (c.metric == MetricKind::CutoffInsensitivity) continue;
    ordered_json check;
    check["name"] = c.name;
    check["metric"] = std::string(metric_name(c.metric));
    check["op"] = std::string(comparison_symbol(c.op));
    check["threshold"] = c.threshold;
    if (!c.target.empty()) check["target"] = c.target;
    if (!c.reference.empty()) check["reference"] = c.reference;
    if (!c.spins.empty()) check["spins"] = c.spins;
    if (!c.groups.empty()) check["groups"] = c.groups;
    if (c.metric == MetricKind::MaxPhotonNumber) check["mode"] = std::string(mode_label(c.mode));
    if (c.metric == MetricKind::GroupBudgetViolation) check["budget"] = c.budget;
    if (!c.gating) check["gating"] = false;
    checks.push_back(std::move(check));
  }
  scenario["checks"] = std::move(checks);
  root["scenario"] = std::move(scenario);
  return root.dump(2) + "\n";
}

}  // namespace ringcav
