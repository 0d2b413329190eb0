#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "ringcav/config.hpp"
#include "ringcav/errors.hpp"

using namespace ringcav;

namespace {

const char* kTransport = R"({
  "system": {"g_c_units": true, "n": 4, "dphi": "pi/2"},
  "basis": {"kind": "single"},
  "initial_state": [{"coeff": 1, "spins": [0]}],
  "targets": [{"name": "far", "terms": [{"coeff": 1, "spins": [2]}]}],
  "simulation": {"t_final": 10}
})";

bool contains(const std::vector<std::string>& items, const std::string& needle) {
  return std::find(items.begin(), items.end(), needle) != items.end();
}

std::string error_text(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Config, MinimalExplicitDocument) {
  const auto doc = parse_config_document(kTransport);
  ASSERT_TRUE(doc.explicit_config.has_value());
  const auto& config = *doc.explicit_config;
  EXPECT_EQ(config.spec.spin_count(), 4u);
  EXPECT_EQ(config.basis.dimension(), 6u);
  EXPECT_EQ(config.t_final, 10.0);
  EXPECT_TRUE(contains(doc.defaults_applied, "simulation.dt = 0.001"));
  EXPECT_TRUE(contains(doc.defaults_applied, "simulation.stride = 100"));
  EXPECT_TRUE(contains(doc.defaults_applied, "system.g_c = 1"));
  const auto report = run_scenario(config);
  EXPECT_EQ(report.trajectory.size(), 101u);
}

TEST(Config, MisspelledKeyIsNamed) {
  const std::string text = R"({
    "system": {"g_c_units": true, "n": 2, "coupling_stregth": 1},
    "basis": {"kind": "single"},
    "initial_state": [{"coeff": 1, "spins": [0]}],
    "simulation": {"t_final": 1}
  })";
  EXPECT_THROW(parse_config(text), ConfigError);
  EXPECT_NE(error_text(text).find("system.coupling_stregth"), std::string::npos);
}

TEST(Config, SyntaxErrorsCarryLineAndColumn) {
  const std::string text = "{\n  \"system\": {\n    \"n\": 4,,\n  }\n}";
  EXPECT_THROW(parse_config(text), ConfigError);
  EXPECT_NE(error_text(text).find("line 3"), std::string::npos) << error_text(text);
}

TEST(Config, WrongTypesAndMissingSections) {
  EXPECT_THROW(parse_config(R"({"system": {"g_c_units": true, "n": "four"},
    "basis": {"kind": "single"}, "initial_state": [{"coeff": 1, "spins": [0]}],
    "simulation": {"t_final": 1}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"system": {"g_c_units": true, "n": 2},
    "basis": {"kind": "single"}, "initial_state": [{"coeff": 1, "spins": [0]}]})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"system": {"g_c_units": true, "n": 2},
    "basis": {"kind": "single"}, "initial_state": [{"coeff": 1, "spins": [5]}],
    "simulation": {"t_final": 1}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"scenario": {"id": "nope"}})"), ConfigError);
}

TEST(Config, NearlyNormalizedStateIsRenormalized) {
  const auto doc = parse_config_document(R"({
    "system": {"g_c_units": true, "n": 2},
    "basis": {"kind": "single"},
    "initial_state": [{"coeff": 0.6, "spins": [0]}, {"coeff": [0, 0.8000001], "spins": [1]}],
    "simulation": {"t_final": 1}
  })");
  ASSERT_EQ(doc.warnings.size(), 1u);
  const auto& terms = doc.explicit_config->initial_state;
  EXPECT_NEAR(std::norm(terms[0].coefficient) + std::norm(terms[1].coefficient), 1.0, 1e-15);
}

TEST(Config, BadNormIsRejected) {
  EXPECT_THROW(parse_config(R"({
    "system": {"g_c_units": true, "n": 2},
    "basis": {"kind": "single"},
    "initial_state": [{"coeff": 1, "spins": [0]}, {"coeff": 1, "spins": [1]}],
    "simulation": {"t_final": 1}
  })"), NormalizationError);
}

TEST(Config, SchedulesAndChecks) {
  const auto config = parse_config(R"({
    "system": {"g_c_units": true, "phases": [0, "pi/2", "pi", "3pi/2"]},
    "basis": {"kind": "single"},
    "initial_state": [{"coeff": 1, "spins": [0]}],
    "targets": [{"name": "pair", "terms": [{"coeff": 1, "spins": [2]}, {"coeff": 1, "spins": [3]}]}],
    "schedules": [
      {"spins": [2, 3], "ramp": {"from": -5, "to": 5, "duration": 4}},
      {"spins": [1], "segments": [{"t_start": 0, "t_end": null, "from": 2, "to": 2}]}
    ],
    "simulation": {"t_final": 4, "dt": 0.002, "stride": 50},
    "scenario": {"id": "mine", "checks": [
      {"name": "low", "metric": "max_spin_population", "spins": [1], "op": "<", "threshold": 1}
    ]}
  })");
  EXPECT_EQ(config.id, "mine");
  EXPECT_EQ(config.settings.dt, 0.002);
  EXPECT_EQ(config.settings.stride, 50u);
  EXPECT_EQ(config.spec.spins().detuning(2)(0.0), -5.0);
  EXPECT_EQ(config.spec.spins().detuning(3)(4.0), 5.0);
  EXPECT_EQ(config.spec.spins().detuning(1)(3.0), 2.0);
  ASSERT_EQ(config.checks.size(), 1u);
  EXPECT_TRUE(run_scenario(config).check("low").passed);
}

TEST(Config, RoundTripThroughJson) {
  for (const auto& config :
       {parse_config(kTransport), make_scenario_config(scenario_id::kStirap),
        make_scenario_config(scenario_id::kMultiExcitation, {{"variant", "B"}}),
        make_scenario_config(scenario_id::kRemote6)}) {
    const auto text = config_to_json(config);
    const auto back = parse_config(text);
    EXPECT_EQ(back.spec, config.spec);
    EXPECT_EQ(back.basis, config.basis);
    EXPECT_EQ(back.initial_state, config.initial_state);
    EXPECT_EQ(back.targets, config.targets);
    EXPECT_EQ(back.settings, config.settings);
    EXPECT_EQ(config_to_json(back), text);
  }
}

TEST(Config, SiUnitsConvertByCollectiveCoupling) {
  const auto si = parse_config(R"({
    "system": {"g_c_units": false, "n": 2, "g_c": 2.0},
    "basis": {"kind": "single"},
    "initial_state": [{"coeff": 1, "spins": [0]}],
    "schedules": [{"spins": [1], "constant": 4.0}],
    "simulation": {"t_final": 5, "dt": 0.0005}
  })");
  EXPECT_NEAR(si.spec.collective_coupling(), 1.0, 1e-15);
  EXPECT_EQ(si.spec.spins().detuning(1)(0.0), 2.0);
  EXPECT_EQ(si.t_final, 10.0);
  EXPECT_EQ(si.settings.dt, 0.001);
}

TEST(Config, BuiltinDocumentRecordsDefaults) {
  const auto doc = parse_config_document(R"({"scenario": {"id": "stirap", "params": {"delta0": 10}}})");
  EXPECT_FALSE(doc.explicit_config.has_value());
  EXPECT_EQ(doc.scenario, "stirap");
  EXPECT_TRUE(contains(doc.defaults_applied, "system.g_c_units = true"));
  EXPECT_TRUE(contains(doc.defaults_applied, "simulation.dt = 0.001"));
  const auto config = resolve_scenario(doc);
  EXPECT_EQ(config.t_final, 10.0);
}

TEST(Config, OverridesLayerOverDocuments) {
  auto doc = builtin_document("transfer");
  apply_overrides(doc, {{"delta_a", "10"}});
  EXPECT_EQ(resolve_scenario(doc).spec.spins().detuning(2)(0.0), 10.0);

  auto explicit_doc = parse_config_document(kTransport);
  apply_overrides(explicit_doc, {{"t_final", "3"}});
  EXPECT_EQ(resolve_scenario(explicit_doc).t_final, 3.0);
  EXPECT_THROW(apply_overrides(explicit_doc, {{"delta_a", "1"}}), ConfigError);
}

TEST(Config, BuiltinChecksCannotBeDeclared) {
  EXPECT_THROW(parse_config(R"({"scenario": {"id": "transfer", "checks": []}})"), ConfigError);
}
