#pragma once

#include <string>
#include <vector>

#include "ringcav/basis.hpp"
#include "ringcav/types.hpp"

namespace ringcav {

/// Which quanta a product basis vector carries: excited spins plus photon
/// numbers in each mode, applied to |vac>.
struct ExcitationPattern {
  std::vector<std::size_t> spins;
  int n_cw = 0;
  int n_ccw = 0;

  int total() const noexcept {
    return static_cast<int>(spins.size()) + n_cw + n_ccw;
  }
  friend bool operator==(const ExcitationPattern&, const ExcitationPattern&) = default;
};

struct StateTerm {
  Complex coefficient{1.0, 0.0};
  ExcitationPattern pattern;

  friend bool operator==(const StateTerm&, const StateTerm&) = default;
};

/// Normalized amplitude vector tagged with its basis.
class QuantumState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Takes amplitudes that must already be normalized within kNormTolerance.
  QuantumState(BasisSpec basis, ComplexVector amplitudes);

  /// Rescales `amplitudes` to unit norm. Throws NormalizationError on a zero
  /// vector.
  static QuantumState normalized(BasisSpec basis, ComplexVector amplitudes);

  /// Sum of coefficient * pattern, then normalized. Throws BasisError on a
  /// pattern not representable in `basis` (repeated spin, wrong excitation
  /// count for the single-excitation basis, photons above the cutoff).
  static QuantumState from_terms(const BasisSpec& basis,
                                 const std::vector<StateTerm>& terms);

  /// Coefficient vector of the un-normalized superposition; exposed so that
  /// callers can measure how far a hand-written state is from unit norm.
  static ComplexVector raw_amplitudes(const BasisSpec& basis,
                                      const std::vector<StateTerm>& terms);

  const BasisSpec& basis() const noexcept { return basis_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dimension() const noexcept { return basis_.dimension(); }
  double norm() const { return amplitudes_.norm(); }

 private:
  BasisSpec basis_;
  ComplexVector amplitudes_;
};

/// Index of a pattern in a basis. Throws BasisError when not representable.
std::size_t basis_index(const BasisSpec& basis, const ExcitationPattern& pattern);

struct NamedState {
  std::string name;
  QuantumState state;
};

}  // namespace ringcav
