#pragma once

#include <string>
#include <vector>

#include "ringcav/basis.hpp"
#include "ringcav/model.hpp"
#include "ringcav/state.hpp"
#include "ringcav/types.hpp"

namespace ringcav {

/// Exact dense exponential per step, with the Hamiltonian evaluated at the
/// step midpoint. Steps are aligned to schedule breakpoints; windows where
/// every schedule is constant reuse one propagator.
struct PropagatorSettings {
  double dt = 1e-3;
  std::size_t stride = 100;

  /// dt / 2 with stride * 2, so both runs sample the same times.
  PropagatorSettings halved() const { return {dt / 2.0, stride * 2}; }
  void validate() const;

  friend bool operator==(const PropagatorSettings&, const PropagatorSettings&) = default;
};

struct Populations {
  std::vector<double> spins;
  double n_cw = 0.0;
  double n_ccw = 0.0;

  double photons() const noexcept { return n_cw + n_ccw; }
};

Populations populations(const QuantumState& state);

/// |<target|state>|^2. Throws BasisError when the bases differ.
double fidelity(const QuantumState& state, const QuantumState& target);

/// Expectation of an observable that is diagonal in the state's basis.
struct DiagonalObservable {
  std::string name;
  RealVector weights;
};

struct TrajectorySample {
  double t = 0.0;
  std::vector<double> spin_populations;
  double n_cw = 0.0;
  double n_ccw = 0.0;
  std::vector<double> fidelities;
  std::vector<double> observables;
  double excitation_number = 0.0;
  double norm = 1.0;
};

/// Time-sampled observables of one run. Sample times strictly increase and
/// always include t = 0 and t_final.
struct Trajectory {
  std::size_t spin_count = 0;
  std::vector<std::string> target_names;
  std::vector<std::string> observable_names;
  std::vector<TrajectorySample> samples;
  /// Sampling resolution, the timing uncertainty of any maximum found here.
  double sample_spacing = 0.0;
  double max_norm_deviation = 0.0;

  bool empty() const noexcept { return samples.empty(); }
  std::size_t size() const noexcept { return samples.size(); }
  std::vector<double> times() const;
  std::vector<double> spin_population(std::size_t m) const;
  std::vector<double> fidelity(std::size_t target) const;
  std::size_t target_index(const std::string& name) const;
  std::size_t observable_index(const std::string& name) const;
};

struct EvolutionResult {
  Trajectory trajectory;
  QuantumState final_state;
};

/// Propagates `initial` under `spec` for t in [0, t_final]. The basis comes
/// from the initial state; targets must share it.
///
/// Throws NormalizationError for an input off unit norm, ScheduleDomainError
/// when a schedule ends before t_final, BasisError on a basis mismatch.
EvolutionResult evolve(const QuantumState& initial, const SystemSpec& spec,
                       const PropagatorSettings& settings, double t_final,
                       const std::vector<NamedState>& targets = {},
                       const std::vector<DiagonalObservable>& observables = {});

struct FidelityPeak {
  double value = 0.0;
  double time = 0.0;
};

/// Largest sampled fidelity of one target and the first time it occurs.
/// Throws EmptyTrajectoryError / IndexError.
FidelityPeak max_fidelity_over_window(const Trajectory& trajectory,
                                      std::size_t target_index);

/// Largest difference between two trajectories sampled on the same grid,
/// over populations, photon numbers and fidelities. Throws NumericalError
/// if the sample times do not line up.
double max_observable_difference(const Trajectory& a, const Trajectory& b);

}  // namespace ringcav
