#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ringcav/protocols.hpp"

namespace ringcav::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPhysicsFailure = 1,
  kConfigError = 2,
  kNumericalError = 3,
};

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  std::size_t workers = 0;
  std::string command_line;
  // Parameter flags that were given, keyed as in scenario.params.
  ParamMap overrides;
};

struct SpectrumOptions {
  std::string n;
  std::string dphi_grid;
  std::string detuning;
};

struct RunOptions {
  std::string scenario;
};

struct SweepOptions {
  std::string scenario;
  std::string param;
  std::string grid;
};

struct CheckOptions {
  std::vector<int> only;
};

int run_spectrum(const CommonOptions& common, const SpectrumOptions& options);
int run_single(const CommonOptions& common, const RunOptions& options);
int run_sweep(const CommonOptions& common, const SweepOptions& options);
int run_check(const CommonOptions& common, const CheckOptions& options);

}  // namespace ringcav::cli
