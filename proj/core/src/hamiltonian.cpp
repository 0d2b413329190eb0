#include "ringcav/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <new>
#include <string>

#include "ringcav/errors.hpp"

namespace ringcav {

CouplingMatrix build_coupling_matrix(const SystemSpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.spin_count());
  CouplingMatrix out{Eigen::Matrix<Complex, 2, Eigen::Dynamic>(2, n)};
  const double g = spec.coupling();
  for (Eigen::Index m = 0; m < n; ++m) {
    const double phi = spec.spins().phase(static_cast<std::size_t>(m));
    out.matrix(0, m) = std::polar(g, phi);
    out.matrix(1, m) = std::polar(g, -phi);
  }
  return out;
}

namespace {

std::vector<double> spin_frequencies(const SystemSpec& spec, double t) {
  std::vector<double> out(spec.spin_count());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = spec.spin_frequency(m, t);
  return out;
}

void check_basis(const SystemSpec& spec, const BasisSpec& basis) {
  if (basis.spin_count() != spec.spin_count()) {
    throw BasisError("basis describes " + std::to_string(basis.spin_count()) +
                     " spins, system has " + std::to_string(spec.spin_count()));
  }
}

}  // namespace

HamiltonianMatrix build_single_excitation_hamiltonian(const SystemSpec& spec, double t) {
  const auto basis = BasisSpec::single_excitation(spec.spin_count());
  const auto n = static_cast<Eigen::Index>(spec.spin_count());
  const auto coupling = build_coupling_matrix(spec);
  const auto freqs = spin_frequencies(spec, t);

  ComplexMatrix h = ComplexMatrix::Zero(n + 2, n + 2);
  h(0, 0) = spec.cavity().frequency;
  h(1, 1) = spec.cavity().frequency;
  h.block(0, 2, 2, n) = coupling.matrix.conjugate();
  h.block(2, 0, n, 2) = coupling.matrix.transpose();
  for (Eigen::Index m = 0; m < n; ++m) h(m + 2, m + 2) = freqs[static_cast<std::size_t>(m)];
  return {std::move(h), basis, spec.time_dependent()};
}

HamiltonianMatrix build_fock_hamiltonian(const SystemSpec& spec, const BasisSpec& basis,
                                         double t) {
  if (basis.kind() != BasisKind::Fock) throw BasisError("expected a Fock basis");
  check_basis(spec, basis);
  const auto coupling = build_coupling_matrix(spec);
  const auto freqs = spin_frequencies(spec, t);
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  const std::size_t n = spec.spin_count();
  const int cutoff = basis.cutoff();

  ComplexMatrix h;
  try {
    h = ComplexMatrix::Zero(dim, dim);
  } catch (const std::bad_alloc&) {
    throw BasisError("cannot allocate a dense Fock Hamiltonian of dimension " +
                     std::to_string(dim));
  }

  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto label = basis.label_of(static_cast<std::size_t>(i));
    double diag = spec.cavity().frequency * (label.n_cw + label.n_ccw);
    for (std::size_t m = 0; m < n; ++m) {
      if (!basis.spin_excited(label.spins, m)) continue;
      diag += freqs[m];
      // a_k^dag S_m^- : spin m emits into mode k, amplitude conj(G(k, m)).
      for (int k = 0; k < 2; ++k) {
        const int occupation = k == 0 ? label.n_cw : label.n_ccw;
        if (occupation >= cutoff) continue;
        FockLabel to = label;
        to.spins &= ~basis.spin_bit(m);
        (k == 0 ? to.n_cw : to.n_ccw) += 1;
        const auto j = static_cast<Eigen::Index>(basis.index_of(to));
        const Complex amplitude =
            coupling.matrix(k, static_cast<Eigen::Index>(m)) * std::sqrt(occupation + 1.0);
        h(j, i) = std::conj(amplitude);
        h(i, j) = amplitude;
      }
    }
    h(i, i) = diag;
  }
  return {std::move(h), basis, spec.time_dependent()};
}

HamiltonianMatrix build_hamiltonian(const SystemSpec& spec, const BasisSpec& basis, double t) {
  if (basis.kind() == BasisKind::SingleExcitation) {
    check_basis(spec, basis);
    return build_single_excitation_hamiltonian(spec, t);
  }
  return build_fock_hamiltonian(spec, basis, t);
}

RealVector excitation_number_diagonal(const BasisSpec& basis) {
  const auto numbers = basis.excitation_numbers();
  RealVector out(static_cast<Eigen::Index>(numbers.size()));
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = numbers[i];
  }
  return out;
}

}  // namespace ringcav
