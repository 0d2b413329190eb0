#include "ringcav/basis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "ringcav/errors.hpp"

namespace ringcav {

std::string_view basis_kind_name(BasisKind kind) noexcept {
  return kind == BasisKind::SingleExcitation ? "single" : "fock";
}

BasisSpec BasisSpec::single_excitation(std::size_t spin_count) {
  if (spin_count == 0) throw BasisError("basis needs at least one spin");
  return BasisSpec(BasisKind::SingleExcitation, spin_count, 1, spin_count + 2);
}

BasisSpec BasisSpec::fock(std::size_t spin_count, int cutoff, std::size_t max_dimension) {
  if (spin_count == 0) throw BasisError("basis needs at least one spin");
  if (cutoff < 1) throw BasisError("Fock cutoff must be at least 1");
  const auto too_large = [&] {
    return BasisError("Fock basis with N = " + std::to_string(spin_count) +
                      ", M = " + std::to_string(cutoff) + " exceeds the dimension limit " +
                      std::to_string(max_dimension));
  };
  if (spin_count >= 63) throw too_large();
  const std::size_t levels = static_cast<std::size_t>(cutoff) + 1;
  const std::size_t spins = std::size_t{1} << spin_count;
  if (levels > max_dimension / levels) throw too_large();
  const std::size_t photons = levels * levels;
  if (photons > max_dimension / spins) throw too_large();
  return BasisSpec(BasisKind::Fock, spin_count, cutoff, photons * spins);
}

std::size_t BasisSpec::mode_index(int mode) const {
  if (kind_ != BasisKind::SingleExcitation) {
    throw BasisError("mode_index is defined for the single-excitation basis only");
  }
  if (mode < 0 || mode > 1) throw IndexError("cavity mode index must be 0 or 1");
  return static_cast<std::size_t>(mode);
}

std::size_t BasisSpec::spin_index(std::size_t m) const {
  if (kind_ != BasisKind::SingleExcitation) {
    throw BasisError("spin_index is defined for the single-excitation basis only");
  }
  if (m >= spin_count_) throw IndexError("spin index " + std::to_string(m) + " out of range");
  return m + 2;
}

std::size_t BasisSpec::index_of(const FockLabel& label) const {
  if (kind_ != BasisKind::Fock) throw BasisError("index_of is defined for the Fock basis only");
  if (label.n_cw < 0 || label.n_cw > cutoff_ || label.n_ccw < 0 || label.n_ccw > cutoff_) {
    throw BasisError("photon number above the Fock cutoff " + std::to_string(cutoff_));
  }
  if (label.spins >> spin_count_) throw IndexError("spin bitstring wider than the chain");
  const std::size_t levels = static_cast<std::size_t>(cutoff_) + 1;
  const std::size_t photon_index =
      static_cast<std::size_t>(label.n_cw) * levels + static_cast<std::size_t>(label.n_ccw);
  return (photon_index << spin_count_) + static_cast<std::size_t>(label.spins);
}

FockLabel BasisSpec::label_of(std::size_t index) const {
  if (kind_ != BasisKind::Fock) throw BasisError("label_of is defined for the Fock basis only");
  if (index >= dimension_) throw IndexError("basis index out of range");
  const std::size_t levels = static_cast<std::size_t>(cutoff_) + 1;
  const std::size_t photon_index = index >> spin_count_;
  FockLabel label;
  label.n_cw = static_cast<int>(photon_index / levels);
  label.n_ccw = static_cast<int>(photon_index % levels);
  label.spins = index & ((std::uint64_t{1} << spin_count_) - 1);
  return label;
}

std::vector<int> BasisSpec::excitation_numbers() const {
  std::vector<int> out(dimension_);
  if (kind_ == BasisKind::SingleExcitation) {
    std::fill(out.begin(), out.end(), 1);
    return out;
  }
  for (std::size_t i = 0; i < dimension_; ++i) {
    const auto label = label_of(i);
    out[i] = label.n_cw + label.n_ccw + std::popcount(label.spins);
  }
  return out;
}

}  // namespace ringcav
