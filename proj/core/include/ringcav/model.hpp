#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ringcav/schedule.hpp"

namespace ringcav {

/// Spins along the cavity axis. phases[m] = k * x_m in radians, stored
/// unreduced. Frequencies in units of g_c by default.
class SpinArray {
 public:
  SpinArray(std::vector<double> phases, double base_frequency,
            std::vector<DetuningSchedule> detunings);
  explicit SpinArray(std::vector<double> phases, double base_frequency = 0.0);

  /// Equally spaced chain, phases m * interval_phase.
  static SpinArray uniform(std::size_t count, double interval_phase,
                           double base_frequency = 0.0);

  std::size_t size() const noexcept { return phases_.size(); }
  const std::vector<double>& phases() const noexcept { return phases_; }
  double phase(std::size_t m) const { return phases_.at(m); }
  double base_frequency() const noexcept { return base_frequency_; }
  const std::vector<DetuningSchedule>& detunings() const noexcept { return detunings_; }
  const DetuningSchedule& detuning(std::size_t m) const { return detunings_.at(m); }

  bool time_dependent() const noexcept;

  SpinArray with_detuning(std::size_t m, DetuningSchedule schedule) const;
  SpinArray with_detunings(std::vector<DetuningSchedule> schedules) const;

  friend bool operator==(const SpinArray&, const SpinArray&) = default;

 private:
  std::vector<double> phases_;
  double base_frequency_;
  std::vector<DetuningSchedule> detunings_;
};

enum class CavityMode { Clockwise = 0, CounterClockwise = 1 };

std::string_view mode_label(CavityMode mode) noexcept;

/// The two counterpropagating modes of the ring; they share one frequency.
struct CavityPair {
  double frequency = 0.0;

  static constexpr std::size_t kModeCount = 2;
  friend bool operator==(const CavityPair&, const CavityPair&) = default;
};

/// Complete physical description. `coupling` is the per-spin g; the
/// collective g_c = g sqrt(N) is derived, never stored independently.
class SystemSpec {
 public:
  SystemSpec(SpinArray spins, CavityPair cavity, double coupling);

  /// Builds a spec from the collective coupling g_c.
  static SystemSpec with_collective_coupling(SpinArray spins, CavityPair cavity,
                                             double collective_coupling);
  /// Uniform chain with g_c = 1 and omega_c = omega_a = 0.
  static SystemSpec uniform_chain(std::size_t count, double interval_phase,
                                  double collective_coupling = 1.0);

  const SpinArray& spins() const noexcept { return spins_; }
  const CavityPair& cavity() const noexcept { return cavity_; }
  std::size_t spin_count() const noexcept { return spins_.size(); }
  double coupling() const noexcept { return coupling_; }
  double collective_coupling() const noexcept;

  bool time_dependent() const noexcept { return spins_.time_dependent(); }

  /// Total spin frequency omega_a + Delta_m(t).
  double spin_frequency(std::size_t m, double t) const;

  SystemSpec with_spins(SpinArray spins) const;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;

 private:
  SpinArray spins_;
  CavityPair cavity_;
  double coupling_;
};

}  // namespace ringcav
