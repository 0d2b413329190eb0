#include "ringcav/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ringcav/errors.hpp"

namespace ringcav {

QuantumState::QuantumState(BasisSpec basis, ComplexVector amplitudes)
    : basis_(basis), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_.dimension()) {
    throw BasisError("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                     ", basis dimension is " + std::to_string(basis_.dimension()));
  }
  const double n = amplitudes_.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw NormalizationError("state norm " + std::to_string(n) + " differs from 1");
  }
}

QuantumState QuantumState::normalized(BasisSpec basis, ComplexVector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw NormalizationError("cannot normalize a zero or non-finite state");
  }
  amplitudes /= n;
  return QuantumState(basis, std::move(amplitudes));
}

std::size_t basis_index(const BasisSpec& basis, const ExcitationPattern& pattern) {
  auto spins = pattern.spins;
  std::sort(spins.begin(), spins.end());
  if (std::adjacent_find(spins.begin(), spins.end()) != spins.end()) {
    throw BasisError("excitation pattern repeats a spin");
  }
  for (auto m : spins) {
    if (m >= basis.spin_count()) {
      throw BasisError("excitation pattern names spin " + std::to_string(m) + " of " +
                       std::to_string(basis.spin_count()));
    }
  }
  if (pattern.n_cw < 0 || pattern.n_ccw < 0) throw BasisError("negative photon number");

  if (basis.kind() == BasisKind::SingleExcitation) {
    if (pattern.total() != 1) {
      throw BasisError("single-excitation basis needs exactly one excitation per pattern");
    }
    if (pattern.n_cw == 1) return basis.mode_index(0);
    if (pattern.n_ccw == 1) return basis.mode_index(1);
    return basis.spin_index(spins.front());
  }

  FockLabel label{pattern.n_cw, pattern.n_ccw, 0};
  for (auto m : spins) label.spins |= basis.spin_bit(m);
  return basis.index_of(label);
}

ComplexVector QuantumState::raw_amplitudes(const BasisSpec& basis,
                                           const std::vector<StateTerm>& terms) {
  ComplexVector amplitudes = ComplexVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  for (const auto& term : terms) {
    amplitudes(static_cast<Eigen::Index>(basis_index(basis, term.pattern))) += term.coefficient;
  }
  return amplitudes;
}

QuantumState QuantumState::from_terms(const BasisSpec& basis,
                                      const std::vector<StateTerm>& terms) {
  if (terms.empty()) throw NormalizationError("state has no terms");
  return normalized(basis, raw_amplitudes(basis, terms));
}

}  // namespace ringcav
