#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ringcav/hamiltonian.hpp"
#include "ringcav/model.hpp"
#include "ringcav/types.hpp"

namespace ringcav {

/// s = (1/N) sum_{m=0}^{N-1} e^{2 i m dphi}.
Complex structure_factor(std::size_t spin_count, double interval_phase);

/// Structure factor of an arbitrary coupling matrix, read off G G^dag.
Complex structure_factor(const CouplingMatrix& coupling);

/// |lambda+ - lambda-| below this multiple of g_c counts as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// G = U Lambda W^dag.
///
/// Column 0 of U / W belongs to lambda+, column 1 to lambda-; the remaining
/// columns of W span the dark subspace. When the two singular values are
/// degenerate, U is fixed to (cw + ccw)/sqrt2, (cw - ccw)/sqrt2 and the
/// bright spin modes follow as G^dag U / lambda.
struct PolaritonDecomposition {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  Eigen::Matrix2cd cavity_modes;
  ComplexMatrix spin_modes;
  Complex structure_factor;
  double collective_coupling = 0.0;
  std::size_t rank = 0;
  bool degenerate = false;

  std::size_t spin_count() const noexcept {
    return static_cast<std::size_t>(spin_modes.rows());
  }
  /// U Lambda W^dag.
  Eigen::Matrix<Complex, 2, Eigen::Dynamic> reconstruct() const;
};

PolaritonDecomposition polariton_decomposition(const CouplingMatrix& coupling);

struct CollectiveModes {
  Eigen::Vector2cd cavity_plus;
  Eigen::Vector2cd cavity_minus;
  ComplexVector spin_plus;
  ComplexVector spin_minus;
  bool degenerate = false;
};

/// |C+-> and |A+->. Requires N >= 2 (DomainError otherwise). When lambda-
/// vanishes, |A-> is a member of the null space and |C-> is cavity-only.
CollectiveModes collective_modes(const PolaritonDecomposition& decomposition);

/// Orthonormal basis of ker G; N - rank(G) vectors.
std::vector<ComplexVector> dark_state_basis(const PolaritonDecomposition& decomposition);

/// Eigenvalues on a (dphi, Delta_a) grid, dphi outermost.
struct SpectrumTable {
  std::size_t spin_count = 0;
  std::vector<double> interval_phases;
  std::vector<double> detunings;
  /// Row r = (i * detunings.size() + j): ascending eigenvalues, N+2 each.
  std::vector<std::vector<double>> eigenvalues;
  /// Splitting between the two polariton pairs extracted from the levels;
  /// zero exactly when lambda+ = lambda-.
  std::vector<double> polariton_gap;

  std::size_t rows() const noexcept { return eigenvalues.size(); }
  std::size_t row_index(std::size_t phase_index, std::size_t detuning_index) const {
    return phase_index * detunings.size() + detuning_index;
  }
};

/// Diagonalizes the single-excitation Hamiltonian of `templ` (spin count,
/// coupling, omega_a, omega_c) with phases m * dphi and a uniform detuning
/// Delta_a on every grid point. `workers` = 0 picks the hardware default.
SpectrumTable energy_spectrum_sweep(const SystemSpec& templ,
                                    const std::vector<double>& interval_phases,
                                    const std::vector<double>& detunings,
                                    std::size_t workers = 0);

/// Degeneracy locations of the two polariton pairs along the phase axis of
/// one detuning column, resolved to the grid: every interior local minimum
/// of the gap whose depth is within one grid step of linear slope, plus
/// exact zeros. Adjacent hits are merged into their midpoint.
std::vector<double> find_polariton_degeneracies(const SpectrumTable& table,
                                                std::size_t detuning_index);

enum class CouplingNormalization {
  /// J = 2 g^2: per-spin couplings, both modes, Hermitian conjugate included.
  PerSpin,
  /// J = 2 g_c^2: the collective prefactor as printed for the flip-flop form.
  Collective,
};

double effective_coupling_scale(const SystemSpec& spec,
                                CouplingNormalization normalization);

/// Photon-mediated flip-flop amplitude J cos(phi_i - phi_j). Throws
/// IndexError for i == j or out-of-range indices.
double effective_coupling(const SystemSpec& spec, std::size_t i, std::size_t j,
                          CouplingNormalization normalization =
                              CouplingNormalization::PerSpin);

/// g = sqrt(C Gamma kappa) / 2, same angular-frequency units as the inputs.
/// Throws DomainError for non-positive or non-finite input.
double platform_coupling(double cooperativity, double spin_linewidth,
                         double cavity_linewidth);

}  // namespace ringcav
