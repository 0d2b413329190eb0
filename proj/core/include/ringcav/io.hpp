#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ringcav/angle.hpp"
#include "ringcav/dynamics.hpp"
#include "ringcav/protocols.hpp"
#include "ringcav/spectral.hpp"
#include "ringcav/sweep.hpp"

namespace ringcav {

/// dphi, delta_a, ev_0 .. ev_{N+1}
void write_spectrum_csv(std::ostream& out, const SpectrumTable& table);
/// t, rho_0 .. rho_{N-1}, n_cw, n_ccw, F_0 .. F_{K-1}
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);
/// <parameter>, then per target F_max_<name>, t_max_<name>, F_final_<name>,
/// then passed.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

/// Report JSON with fixed key order: scenario, config, thresholds,
/// outcomes, checks, passed.
std::string report_to_json(const ScenarioReport& report);
/// Inverse of report_to_json. The trajectory is not part of the JSON and
/// comes back empty.
ScenarioReport report_from_json(std::string_view text);

std::string sweep_to_json(const SweepResult& sweep);

std::uint64_t fnv1a64(std::string_view data) noexcept;

std::string tool_version();

struct RunManifest {
  std::string command;
  std::string config_hash;
  std::string tool_version;
  double wall_seconds = 0.0;
  std::vector<std::string> outputs;
  /// Resolved configuration (JSON text) including defaults.
  std::string resolved_config;
  std::vector<std::string> defaults_applied;
  std::vector<std::string> warnings;
};

std::string manifest_to_json(const RunManifest& manifest);

/// Writes `contents` to `path`, creating parent directories. Throws Error
/// naming the path on failure.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

/// trajectory.csv and report.json under `directory`; returns the file names
/// written, relative to `directory`.
std::vector<std::string> emit_outputs(const ScenarioReport& report,
                                      const std::filesystem::path& directory);

}  // namespace ringcav
