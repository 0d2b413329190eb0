#include "ringcav/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ringcav/config.hpp"
#include "ringcav/errors.hpp"

#ifndef RINGCAV_VERSION
#define RINGCAV_VERSION "0.0.0"
#endif

namespace ringcav {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

void write_spectrum_csv(std::ostream& out, const SpectrumTable& table) {
  std::vector<std::string> header{"dphi", "delta_a"};
  for (std::size_t k = 0; k < table.spin_count + 2; ++k) header.push_back("ev_" + std::to_string(k));
  write_row(out, header);
  for (std::size_t i = 0; i < table.interval_phases.size(); ++i) {
    for (std::size_t j = 0; j < table.detunings.size(); ++j) {
      std::vector<std::string> row{format_double(table.interval_phases[i]),
                                   format_double(table.detunings[j])};
      for (double ev : table.eigenvalues[table.row_index(i, j)]) row.push_back(format_double(ev));
      write_row(out, row);
    }
  }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  std::vector<std::string> header{"t"};
  for (std::size_t m = 0; m < trajectory.spin_count; ++m) header.push_back("rho_" + std::to_string(m));
  header.push_back("n_cw");
  header.push_back("n_ccw");
  for (std::size_t k = 0; k < trajectory.target_names.size(); ++k) {
    header.push_back("F_" + std::to_string(k));
  }
  write_row(out, header);
  for (const auto& s : trajectory.samples) {
    std::vector<std::string> row{format_double(s.t)};
    for (double p : s.spin_populations) row.push_back(format_double(p));
    row.push_back(format_double(s.n_cw));
    row.push_back(format_double(s.n_ccw));
    for (double f : s.fidelities) row.push_back(format_double(f));
    write_row(out, row);
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  std::vector<std::string> header{sweep.parameter};
  std::vector<std::string> names;
  if (!sweep.reports.empty()) {
    for (const auto& t : sweep.reports.front().targets) names.push_back(t.name);
  }
  for (const auto& name : names) {
    header.push_back("F_max_" + name);
    header.push_back("t_max_" + name);
    header.push_back("F_final_" + name);
  }
  header.push_back("passed");
  write_row(out, header);
  for (std::size_t i = 0; i < sweep.values.size(); ++i) {
    const auto& report = sweep.reports[i];
    std::vector<std::string> row{format_double(sweep.values[i])};
    for (const auto& t : report.targets) {
      row.push_back(format_double(t.max_fidelity));
      row.push_back(format_double(t.time_at_max));
      row.push_back(format_double(t.final_fidelity));
    }
    row.push_back(report.passed() ? "1" : "0");
    write_row(out, row);
  }
}

namespace {

ordered_json check_json(const CheckOutcome& c) {
  ordered_json out;
  out["name"] = c.spec.name;
  out["metric"] = std::string(metric_name(c.spec.metric));
  out["op"] = std::string(comparison_symbol(c.spec.op));
  out["threshold"] = c.spec.threshold;
  out["gating"] = c.spec.gating;
  out["value"] = c.value;
  out["passed"] = c.passed;
  return out;
}

ordered_json thresholds_json(const std::vector<CheckOutcome>& checks) {
  ordered_json out = ordered_json::object();
  for (const auto& c : checks) {
    out[c.spec.name] = std::string(comparison_symbol(c.spec.op)) + " " +
                       format_double(c.spec.threshold);
  }
  return out;
}

ordered_json outcomes_json(const ScenarioReport& report) {
  ordered_json out;
  out["sample_spacing"] = report.trajectory.sample_spacing;
  out["max_norm_deviation"] = report.trajectory.max_norm_deviation;
  ordered_json targets = ordered_json::array();
  for (const auto& t : report.targets) {
    ordered_json target;
    target["name"] = t.name;
    target["max_fidelity"] = t.max_fidelity;
    target["time_at_max"] = t.time_at_max;
    target["final_fidelity"] = t.final_fidelity;
    targets.push_back(std::move(target));
  }
  out["targets"] = std::move(targets);
  return out;
}

ordered_json report_object(const ScenarioReport& report) {
  ordered_json root;
  root["scenario"] = report.scenario;
  root["config"] = ordered_json::parse(config_to_json(report.config));
  root["thresholds"] = thresholds_json(report.checks);
  root["outcomes"] = outcomes_json(report);
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  root["checks"] = std::move(checks);
  root["passed"] = report.passed();
  return root;
}

}  // namespace

std::string report_to_json(const ScenarioReport& report) {
  return report_object(report).dump(2) + "\n";
}

ScenarioReport report_from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
    ScenarioReport report;
    report.scenario = root.at("scenario").get<std::string>();
    report.config = parse_config(root.at("config").dump());
    const auto& outcomes = root.at("outcomes");
    report.trajectory.sample_spacing = outcomes.at("sample_spacing").get<double>();
    report.trajectory.max_norm_deviation = outcomes.at("max_norm_deviation").get<double>();
    report.trajectory.spin_count = report.config.spec.spin_count();
    for (const auto& t : outcomes.at("targets")) {
      report.targets.push_back({t.at("name").get<std::string>(), t.at("max_fidelity").get<double>(),
                                t.at("time_at_max").get<double>(),
                                t.at("final_fidelity").get<double>()});
      report.trajectory.target_names.push_back(report.targets.back().name);
    }
    for (const auto& c : root.at("checks")) {
      CheckOutcome outcome;
      const auto name = c.at("name").get<std::string>();
      const auto declared = std::find_if(report.config.checks.begin(), report.config.checks.end(),
                                         [&](const CheckSpec& s) { return s.name == name; });
      if (declared != report.config.checks.end()) {
        outcome.spec = *declared;
      } else {
        outcome.spec.name = name;
        outcome.spec.metric = parse_metric(c.at("metric").get<std::string>());
        outcome.spec.op = parse_comparison(c.at("op").get<std::string>());
        outcome.spec.threshold = c.at("threshold").get<double>();
        outcome.spec.gating = c.at("gating").get<bool>();
      }
      outcome.value = c.at("value").get<double>();
      outcome.passed = c.at("passed").get<bool>();
      report.checks.push_back(std::move(outcome));
    }
    return report;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

std::string sweep_to_json(const SweepResult& sweep) {
  ordered_json root;
  root["scenario"] = sweep.scenario;
  root["base_scenario"] = sweep.base_scenario;
  root["parameter"] = sweep.parameter;
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < sweep.values.size(); ++i) {
    const auto& report = sweep.reports[i];
    ordered_json point;
    point["value"] = sweep.values[i];
    point["outcomes"] = outcomes_json(report);
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) checks.push_back(check_json(c));
    point["checks"] = std::move(checks);
    point["passed"] = report.passed();
    points.push_back(std::move(point));
  }
  root["points"] = std::move(points);
  root["thresholds"] = thresholds_json(sweep.checks);
  ordered_json checks = ordered_json::array();
  for (const auto& c : sweep.checks) checks.push_back(check_json(c));
  root["checks"] = std::move(checks);
  root["passed"] = sweep.passed();
  return root.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view data) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string tool_version() { return RINGCAV_VERSION; }

std::string manifest_to_json(const RunManifest& manifest) {
  ordered_json root;
  root["command"] = manifest.command;
  root["config_hash"] = manifest.config_hash;
  root["tool_version"] = manifest.tool_version;
  root["wall_seconds"] = manifest.wall_seconds;
  root["outputs"] = manifest.outputs;
  root["resolved_config"] = manifest.resolved_config.empty()
                                ? ordered_json(nullptr)
                                : ordered_json::parse(manifest.resolved_config);
  root["defaults_applied"] = manifest.defaults_applied;
  root["warnings"] = manifest.warnings;
  return root.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw Error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw Error("failed writing " + path.string());
}

std::vector<std::string> emit_outputs(const ScenarioReport& report,
                                      const std::filesystem::path& directory) {
  std::ostringstream csv;
  write_trajectory_csv(csv, report.trajectory);
  write_text_file(directory / "trajectory.csv", csv.str());
  write_text_file(directory / "report.json", report_to_json(report));
  return {"trajectory.csv", "report.json"};
}

}  // namespace ringcav
