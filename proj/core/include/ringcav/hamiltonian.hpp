#pragma once

#include <Eigen/Core>

#include "ringcav/basis.hpp"
#include "ringcav/model.hpp"
#include "ringcav/types.hpp"

namespace ringcav {

/// The 2 x N spin-cavity coupling matrix. Row 0 is the cw mode with entries
/// g e^{+i phi_m}, row 1 the ccw mode with g e^{-i phi_m}.
///
/// Entry (k, m) is the amplitude with which spin m absorbs a photon from
/// mode k: <A_m|H|C_k> = G(k, m). The emission amplitude into mode k is its
/// conjugate.
struct CouplingMatrix {
  Eigen::Matrix<Complex, 2, Eigen::Dynamic> matrix;

  std::size_t spin_count() const noexcept {
    return static_cast<std::size_t>(matrix.cols());
  }
};

CouplingMatrix build_coupling_matrix(const SystemSpec& spec);

struct HamiltonianMatrix {
  ComplexMatrix matrix;
  BasisSpec basis;
  bool time_dependent = false;
};

/// (N+2) x (N+2) block matrix
///   [ omega_c I_2      conj(G)                    ]
///   [ G^T              diag(omega_a + Delta_m(t)) ]
/// Throws ScheduleDomainError when t lies outside a detuning schedule.
HamiltonianMatrix build_single_excitation_hamiltonian(const SystemSpec& spec, double t);

/// Full RWA Hamiltonian on the truncated two-mode Fock space tensored with
/// N spins. Creation operators acting on a mode at its cutoff give zero, so
/// the excitation number is conserved exactly.
HamiltonianMatrix build_fock_hamiltonian(const SystemSpec& spec, const BasisSpec& basis,
                                         double t);

/// Dispatches on the basis kind.
HamiltonianMatrix build_hamiltonian(const SystemSpec& spec, const BasisSpec& basis,
                                    double t);

/// n_cw + n_ccw + sum_m S+_m S-_m, diagonal in both bases.
RealVector excitation_number_diagonal(const BasisSpec& basis);

}  // namespace ringcav
