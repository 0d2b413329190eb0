#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringcav/protocols.hpp"

namespace ringcav {

/// A parsed configuration document (JSON syntax). Sections: `system`,
/// `basis`, `initial_state`, `targets`, `schedules`, `simulation`,
/// `scenario`. Unknown keys anywhere are rejected.
///
/// Two forms are accepted. A built-in scenario needs only
///   {"scenario": {"id": "stirap", "params": {"delta0": 10}}}
/// with an optional `simulation` section (dt, stride, t_final). An explicit
/// run spells out `system`, `basis`, `initial_state` and `simulation`, with
/// `targets`, `schedules` and `scenario.checks` optional.
struct ConfigDocument {
  std::string scenario = "custom";
  ParamMap params;
  std::optional<std::string> sweep_parameter;
  std::optional<std::string> sweep_grid;
  std::optional<ScenarioConfig> explicit_config;
  std::vector<std::string> warnings;
  /// "key = value" for every default filled in.
  std::vector<std::string> defaults_applied;
};

/// Throws ConfigError (with line/column for syntax errors, key path for
/// semantic ones) and NormalizationError when the initial state's norm is
/// off by more than 1e-6; smaller deviations are renormalized with a
/// warning.
ConfigDocument parse_config_document(std::string_view text);

/// Document equivalent to {"scenario": {"id": scenario, "params": params}}.
ConfigDocument builtin_document(std::string scenario, ParamMap params = {});

/// Layers command-line parameters over a document and re-derives the
/// recorded defaults. Explicit documents accept dt, stride and t_final only.
void apply_overrides(ConfigDocument& document, const ParamMap& overrides);

/// Resolves a document into a single-run configuration.
ScenarioConfig resolve_scenario(const ConfigDocument& document);

/// parse_config_document + resolve_scenario.
ScenarioConfig parse_config(std::string_view text);

/// Fully explicit document for `config`; parse_config accepts it back and
/// yields an equal configuration.
std::string config_to_json(const ScenarioConfig& config);

inline constexpr double kAutoRenormalizeLimit = 1e-6;

}  // namespace ringcav
