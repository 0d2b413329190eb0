#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ringcav {

enum class BasisKind { SingleExcitation, Fock };

std::string_view basis_kind_name(BasisKind kind) noexcept;

/// Occupation label of one Fock basis vector. Bit (N-1-m) of `spins` holds
/// spin m, so spin 0 is the most significant bit of the bitstring.
struct FockLabel {
  int n_cw = 0;
  int n_ccw = 0;
  std::uint64_t spins = 0;

  friend bool operator==(const FockLabel&, const FockLabel&) = default;
};

/// Basis descriptor.
///
/// SingleExcitation: dimension N + 2, ordered [cw, ccw, spin_0 .. spin_{N-1}].
/// Fock: dimension (M+1)^2 2^N, lexicographic with the cw occupation
/// outermost, then ccw, then the spin bitstring (spin_0 most significant):
///   index = (n_cw (M+1) + n_ccw) 2^N + bits.
class BasisSpec {
 public:
  static constexpr std::size_t kDefaultMaxDimension = std::size_t{1} << 20;

  static BasisSpec single_excitation(std::size_t spin_count);
  /// Throws BasisError when the dimension exceeds `max_dimension`.
  static BasisSpec fock(std::size_t spin_count, int cutoff,
                        std::size_t max_dimension = kDefaultMaxDimension);

  BasisKind kind() const noexcept { return kind_; }
  std::size_t spin_count() const noexcept { return spin_count_; }
  /// Maximum photon occupation per mode (Fock only, 1 for SingleExcitation).
  int cutoff() const noexcept { return cutoff_; }
  std::size_t dimension() const noexcept { return dimension_; }

  // Single-excitation indices.
  std::size_t mode_index(int mode) const;
  std::size_t spin_index(std::size_t m) const;

  // Fock indices.
  std::size_t index_of(const FockLabel& label) const;
  FockLabel label_of(std::size_t index) const;
  bool spin_excited(std::uint64_t bits, std::size_t m) const noexcept {
    return (bits >> (spin_count_ - 1 - m)) & 1U;
  }
  std::uint64_t spin_bit(std::size_t m) const noexcept {
    return std::uint64_t{1} << (spin_count_ - 1 - m);
  }

  /// Total excitation number of every basis vector, in index order.
  std::vector<int> excitation_numbers() const;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;

 private:
  BasisSpec(BasisKind kind, std::size_t spins, int cutoff, std::size_t dim)
      : kind_(kind), spin_count_(spins), cutoff_(cutoff), dimension_(dim) {}

  BasisKind kind_;
  std::size_t spin_count_;
  int cutoff_;
  std::size_t dimension_;
};

}  // namespace ringcav
