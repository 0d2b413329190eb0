#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "ringcav/angle.hpp"
#include "ringcav/config.hpp"
#include "ringcav/errors.hpp"
#include "ringcav/io.hpp"
#include "ringcav/spectral.hpp"
#include "ringcav/sweep.hpp"
#include "ringcav/verification.hpp"

namespace ringcav::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path, "--config");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

ConfigDocument load_document(const CommonOptions& common, const std::string& scenario_flag,
                             const std::string& fallback_scenario) {
  ConfigDocument doc;
  if (!common.config_path.empty()) {
    doc = parse_config_document(read_file(common.config_path));
    if (!scenario_flag.empty() && scenario_flag != doc.scenario) {
      if (doc.explicit_config) {
        throw ConfigError("--scenario cannot replace an explicit configuration", "scenario.id");
      }
      auto params = doc.params;
      auto warnings = doc.warnings;
      auto sweep_parameter = doc.sweep_parameter;
      auto sweep_grid = doc.sweep_grid;
      doc = builtin_document(scenario_flag, params);
      doc.warnings = warnings;
      doc.sweep_parameter = sweep_parameter;
      doc.sweep_grid = sweep_grid;
    }
  } else {
    const std::string id = scenario_flag.empty() ? fallback_scenario : scenario_flag;
    if (id.empty()) throw ConfigError("give --scenario or --config", "scenario.id");
    doc = builtin_document(id);
  }
  apply_overrides(doc, common.overrides);
  return doc;
}

std::string hash_hex(std::string_view text) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(fnv1a64(text)));
  return buffer;
}

void finish_outputs(const CommonOptions& common, const std::string& resolved,
                    const ConfigDocument& doc, std::vector<std::string> outputs,
                    Clock::time_point start) {
  RunManifest manifest;
  manifest.command = common.command_line;
  manifest.config_hash = hash_hex(resolved);
  manifest.tool_version = tool_version();
  manifest.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  outputs.push_back("manifest.json");
  manifest.outputs = std::move(outputs);
  manifest.resolved_config = resolved;
  manifest.defaults_applied = doc.defaults_applied;
  manifest.warnings = doc.warnings;
  write_text_file(std::filesystem::path(common.out_dir) / "manifest.json",
                  manifest_to_json(manifest));
}

void print_warnings(const ConfigDocument& doc) {
  for (const auto& w : doc.warnings) std::cerr << "warning: " << w << '\n';
}

std::vector<double> detuning_values(const std::string& text) {
  if (text.find(':') != std::string::npos) return parse_grid(text);
  return {parse_angle(text)};
}

}  // namespace

int run_spectrum(const CommonOptions& common, const SpectrumOptions& options) {
  const auto start = Clock::now();
  ConfigDocument doc;
  if (!common.config_path.empty()) {
    doc = parse_config_document(read_file(common.config_path));
    if (doc.scenario != "spectrum") {
      throw ConfigError("spectrum needs scenario.id = \"spectrum\"", "scenario.id");
    }
  } else {
    doc = builtin_document("spectrum");
  }
  ParamMap overrides = common.overrides;
  if (!options.n.empty()) overrides["n"] = options.n;
  if (!options.dphi_grid.empty()) overrides["dphi_grid"] = options.dphi_grid;
  if (!options.detuning.empty()) overrides["detuning"] = options.detuning;
  apply_overrides(doc, overrides);
  for (const auto& [key, value] : doc.params) {
    if (key != "n" && key != "dphi_grid" && key != "detuning") {
      throw ConfigError("unknown parameter '" + key + "' for spectrum", "scenario.params." + key);
    }
  }
  auto take = [&](const std::string& key, const std::string& fallback) {
    const auto it = doc.params.find(key);
    if (it != doc.params.end()) return it->second;
    doc.defaults_applied.push_back("scenario.params." + key + " = " + fallback);
    return fallback;
  };
  const std::string n_text = take("n", "4");
  const std::string grid_text = take("dphi_grid", "0:pi:200");
  const std::string detuning_text = take("detuning", "0");
  const double n = param_number({{"n", n_text}}, "n", 4);
  if (!(n >= 1.0) || n != std::floor(n)) throw ConfigError("n must be a positive integer", "scenario.params.n");
  const auto phases = parse_grid(grid_text);
  const auto detunings = detuning_values(detuning_text);

  const auto table = energy_spectrum_sweep(SystemSpec::uniform_chain(static_cast<std::size_t>(n), 0.0),
                                           phases, detunings, resolve_worker_count(common.workers));
  std::ostringstream csv;
  write_spectrum_csv(csv, table);
  print_warnings(doc);
  if (common.out_dir.empty()) {
    std::cout << csv.str();
    return kSuccess;
  }
  const std::filesystem::path out(common.out_dir);
  write_text_file(out / "spectrum.csv", csv.str());
  nlohmann::ordered_json resolved;
  resolved["scenario"] = "spectrum";
  resolved["n"] = static_cast<std::size_t>(n);
  resolved["dphi_grid"] = grid_text;
  resolved["detuning"] = detuning_text;
  finish_outputs(common, resolved.dump(2), doc, {"spectrum.csv"}, start);
  std::cerr << "wrote " << table.rows() << " rows to " << (out / "spectrum.csv").string() << '\n';
  return kSuccess;
}

int run_single(const CommonOptions& common, const RunOptions& options) {
  const auto start = Clock::now();
  const auto doc = load_document(common, options.scenario, "");
  ScenarioReport report;
  if (doc.explicit_config) {
    report = run_scenario(*doc.explicit_config);
  } else {
    if (is_sweep_scenario(doc.scenario)) {
      throw ConfigError("'" + doc.scenario + "' is a sweep; use the sweep subcommand", "scenario.id");
    }
    report = run_protocol(doc.scenario, doc.params);
  }
  print_warnings(doc);
  const std::string json = report_to_json(report);
  if (common.out_dir.empty()) {
    std::cout << json;
  } else {
    auto outputs = emit_outputs(report, common.out_dir);
    finish_outputs(common, config_to_json(report.config), doc, std::move(outputs), start);
  }
  for (const auto& c : report.checks) {
    std::cerr << (c.passed ? "pass" : (c.spec.gating ? "FAIL" : "note")) << "  " << c.spec.name
              << " = " << format_double(c.value) << " (" << comparison_symbol(c.spec.op) << ' '
              << format_double(c.spec.threshold) << ")\n";
  }
  return report.passed() ? kSuccess : kPhysicsFailure;
}

int run_sweep(const CommonOptions& common, const SweepOptions& options) {
  const auto start = Clock::now();
  const auto doc = load_document(common, options.scenario, "");
  if (doc.explicit_config) {
    throw ConfigError("sweeps run over built-in scenarios only", "scenario.id");
  }
  std::string parameter = !options.param.empty() ? options.param : doc.sweep_parameter.value_or("");
  std::vector<double> grid;
  std::string grid_text;
  if (!options.grid.empty()) {
    grid_text = options.grid;
  } else if (doc.sweep_grid) {
    grid_text = *doc.sweep_grid;
  }
  auto defaults = doc.defaults_applied;
  if (!grid_text.empty()) {
    grid = parse_grid(grid_text);
  } else {
    grid = default_sweep_grid(doc.scenario);
    grid_text = doc.scenario == scenario_id::kGateSweep ? "0:15:31" : "0:20:41";
    defaults.push_back("scenario.sweep.grid = " + grid_text);
  }
  if (!is_sweep_scenario(doc.scenario) && parameter.empty()) {
    throw ConfigError("sweep needs --param for scenario '" + doc.scenario + "'", "scenario.sweep.param");
  }
  ParamMap base = doc.params;
  const auto result =
      run_named_sweep(doc.scenario, base, parameter, grid, resolve_worker_count(common.workers));
  print_warnings(doc);
  std::ostringstream csv;
  write_sweep_csv(csv, result);
  if (common.out_dir.empty()) {
    std::cout << csv.str();
  } else {
    const std::filesystem::path out(common.out_dir);
    write_text_file(out / "sweep.csv", csv.str());
    write_text_file(out / "sweep.json", sweep_to_json(result));
    nlohmann::ordered_json resolved;
    resolved["scenario"] = result.scenario;
    resolved["params"] = base;
    resolved["sweep"] = {{"param", result.parameter}, {"grid", grid_text}};
    auto with_defaults = doc;
    with_defaults.defaults_applied = defaults;
    finish_outputs(common, resolved.dump(2), with_defaults, {"sweep.csv", "sweep.json"}, start);
  }
  for (const auto& c : result.checks) {
    std::cerr << (c.passed ? "pass" : (c.spec.gating ? "FAIL" : "note")) << "  " << c.spec.name
              << " = " << format_double(c.value) << " (" << comparison_symbol(c.spec.op) << ' '
              << format_double(c.spec.threshold) << ")\n";
  }
  return result.passed() ? kSuccess : kPhysicsFailure;
}

int run_check(const CommonOptions& common, const CheckOptions& options) {
  using namespace verification;
  const std::size_t workers = resolve_worker_count(common.workers);
  std::vector<CriterionResult> results;
  auto emit = [&](const CriterionResult& r) {
    std::cout << format_result_line(r) << std::endl;
    results.push_back(r);
  };
  if (options.only.empty()) {
    run_acceptance_suite(workers, emit);
  } else {
    for (int id : options.only) {
      switch (id) {
        case 1: emit(polariton_formula()); break;
        case 2: emit(degeneracy_count(workers)); break;
        case 3: emit(spin_grouping()); break;
        case 4: emit(entangled_transfer()); break;
        case 5: emit(detuning_gate(workers)); break;
        case 6: emit(remote_transfer()); break;
        case 7: emit(stirap(workers)); break;
        case 8: emit(multi_excitation()); break;
        case 9: emit(effective_coupling_nulls()); break;
        case 10: emit(platform_calculator()); break;
        case 11: emit(numerical_hygiene(workers)); break;
        default: throw ConfigError("no criterion " + std::to_string(id), "--only");
      }
    }
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return passed == results.size() ? kSuccess : kPhysicsFailure;
}

}  // namespace ringcav::cli
