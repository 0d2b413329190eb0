#include "ringcav/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ringcav/errors.hpp"

namespace ringcav {

SpinArray::SpinArray(std::vector<double> phases, double base_frequency,
                     std::vector<DetuningSchedule> detunings)
    : phases_(std::move(phases)),
      base_frequency_(base_frequency),
      detunings_(std::move(detunings)) {
  if (phases_.empty()) throw DomainError("spin array needs at least one spin");
  if (detunings_.size() != phases_.size()) {
    throw DomainError("spin array has " + std::to_string(phases_.size()) + " phases but " +
                      std::to_string(detunings_.size()) + " detuning schedules");
  }
  for (double p : phases_) {
    if (!std::isfinite(p)) throw DomainError("spin phase is not finite");
  }
  if (!std::isfinite(base_frequency_)) throw DomainError("spin frequency is not finite");
}

SpinArray::SpinArray(std::vector<double> phases, double base_frequency)
    : SpinArray(phases, base_frequency, std::vector<DetuningSchedule>(phases.size())) {}

SpinArray SpinArray::uniform(std::size_t count, double interval_phase, double base_frequency) {
  std::vector<double> phases(count);
  for (std::size_t m = 0; m < count; ++m) {
    phases[m] = static_cast<double>(m) * interval_phase;
  }
  return SpinArray(std::move(phases), base_frequency);
}

bool SpinArray::time_dependent() const noexcept {
  return std::any_of(detunings_.begin(), detunings_.end(),
                     [](const DetuningSchedule& s) { return !s.is_constant(); });
}

SpinArray SpinArray::with_detuning(std::size_t m, DetuningSchedule schedule) const {
  if (m >= size()) throw IndexError("spin index " + std::to_string(m) + " out of range");
  auto copy = detunings_;
  copy[m] = std::move(schedule);
  return SpinArray(phases_, base_frequency_, std::move(copy));
}

SpinArray SpinArray::with_detunings(std::vector<DetuningSchedule> schedules) const {
  return SpinArray(phases_, base_frequency_, std::move(schedules));
}

std::string_view mode_label(CavityMode mode) noexcept {
  return mode == CavityMode::Clockwise ? "cw" : "ccw";
}

SystemSpec::SystemSpec(SpinArray spins, CavityPair cavity, double coupling)
    : spins_(std::move(spins)), cavity_(cavity), coupling_(coupling) {
  if (!std::isfinite(coupling_) || coupling_ < 0.0) {
    throw DomainError("per-spin coupling must be finite and non-negative");
  }
  if (!std::isfinite(cavity_.frequency)) throw DomainError("cavity frequency is not finite");
}

SystemSpec SystemSpec::with_collective_coupling(SpinArray spins, CavityPair cavity,
                                                double collective_coupling) {
  const double n = static_cast<double>(spins.size());
  return SystemSpec(std::move(spins), cavity, collective_coupling / std::sqrt(n));
}

SystemSpec SystemSpec::uniform_chain(std::size_t count, double interval_phase,
                                     double collective_coupling) {
  return with_collective_coupling(SpinArray::uniform(count, interval_phase), CavityPair{},
                                  collective_coupling);
}

double SystemSpec::collective_coupling() const noexcept {
  return coupling_ * std::sqrt(static_cast<double>(spins_.size()));
}

double SystemSpec::spin_frequency(std::size_t m, double t) const {
  return spins_.base_frequency() + spins_.detuning(m)(t);
}

SystemSpec SystemSpec::with_spins(SpinArray spins) const {
  return SystemSpec(std::move(spins), cavity_, coupling_);
}

}  // namespace ringcav
