#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "ringcav/errors.hpp"
#include "ringcav/io.hpp"

namespace {

using namespace ringcav;
using namespace ringcav::cli;

struct ParamFlag {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr ParamFlag kParamFlags[] = {
    {"--n", "n", "Number of spins"},
    {"--dphi", "dphi", "Interval phase, e.g. pi/2"},
    {"--theta", "theta", "Relative phase of the initial pair"},
    {"--delta-a", "delta_a", "Detuning of the addressed spins (g_c)"},
    {"--delta0", "delta0", "STIRAP source detuning amplitude (g_c)"},
    {"--delta1", "delta1", "STIRAP sink detuning amplitude (g_c)"},
    {"--ramp-time", "ramp_time", "STIRAP ramp duration (1/g_c)"},
    {"--variant", "variant", "multi-exc variant, A or B"},
    {"--cutoff", "cutoff", "Fock cutoff per mode"},
    {"--t-final", "t_final", "Propagation window (1/g_c)"},
    {"--dt", "dt", "Propagator step (1/g_c)"},
    {"--stride", "stride", "Steps between trajectory samples"},
};

void add_common(CLI::App& sub, CommonOptions& common) {
  sub.add_option("--config", common.config_path, "JSON configuration file")->check(CLI::ExistingFile);
  sub.add_option("--out", common.out_dir, "Output directory (stdout when omitted)");
  sub.add_option("--workers", common.workers,
                 std::string("Worker threads (default: ") + kWorkersEnvVar + " or all cores)");
}

void add_param_flags(CLI::App& sub, std::map<std::string, std::string>& values) {
  for (const auto& f : kParamFlags) sub.add_option(f.flag, values[f.key], f.help);
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) out += ' ';
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode ring-cavity spin array simulator"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  CommonOptions common;
  common.command_line = join_args(argc, argv);
  std::map<std::string, std::string> run_values;
  std::map<std::string, std::string> sweep_values;

  SpectrumOptions spectrum_options;
  auto* spectrum = app.add_subcommand("spectrum", "Single-excitation eigenvalues over a phase grid");
  add_common(*spectrum, common);
  spectrum->add_option("--n", spectrum_options.n, "Number of spins (default 4)");
  spectrum->add_option("--dphi-grid", spectrum_options.dphi_grid,
                       "start:stop:count (default 0:pi:200)");
  spectrum->add_option("--detuning", spectrum_options.detuning,
                       "Uniform detuning value or start:stop:count (default 0)");

  RunOptions run_options;
  auto* run = app.add_subcommand("run", "Run one scenario; trajectory CSV and report JSON");
  add_common(*run, common);
  run->add_option("--scenario", run_options.scenario, "Built-in scenario id");
  add_param_flags(*run, run_values);

  SweepOptions sweep_options;
  auto* sweep = app.add_subcommand("sweep", "Map a parameter over a grid");
  add_common(*sweep, common);
  sweep->add_option("--scenario", sweep_options.scenario, "gate-sweep, stirap-scan or a single-run id");
  sweep->add_option("--param", sweep_options.param, "Parameter to sweep");
  sweep->add_option("--grid", sweep_options.grid, "start:stop:count");
  add_param_flags(*sweep, sweep_values);

  CheckOptions check_options;
  auto* check = app.add_subcommand("check", "Run the acceptance suite");
  check->add_option("--workers", common.workers, "Worker threads");
  check->add_option("--only", check_options.only, "Criterion ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kConfigError;
  }

  auto collect = [&](const std::map<std::string, std::string>& values) {
    for (const auto& [key, value] : values) {
      if (!value.empty()) common.overrides[key] = value;
    }
  };

  try {
    if (spectrum->parsed()) return run_spectrum(common, spectrum_options);
    if (run->parsed()) {
      collect(run_values);
      return run_single(common, run_options);
    }
    if (sweep->parsed()) {
      collect(sweep_values);
      return run_sweep(common, sweep_options);
    }
    if (check->parsed()) return run_check(common, check_options);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ProtocolNotApplicable& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const BasisError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NormalizationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ScheduleDomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalError;
  }
  return kConfigError;
}
