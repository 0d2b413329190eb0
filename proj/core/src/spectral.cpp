#include "ringcav/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ringcav/errors.hpp"
#include "ringcav/sweep.hpp"

namespace ringcav {

Complex structure_factor(std::size_t spin_count, double interval_phase) {
  if (spin_count == 0) throw DomainError("structure factor needs N >= 1");
  Complex sum{0.0, 0.0};
  for (std::size_t m = 0; m < spin_count; ++m) {
    sum += std::polar(1.0, 2.0 * static_cast<double>(m) * interval_phase);
  }
  return sum / static_cast<double>(spin_count);
}

Complex structure_factor(const CouplingMatrix& coupling) {
  const Eigen::Matrix2cd sigma = coupling.matrix * coupling.matrix.adjoint();
  const double gc2 = sigma(0, 0).real();
  if (!(gc2 > 0.0)) return {0.0, 0.0};
  return sigma(0, 1) / gc2;
}

Eigen::Matrix<Complex, 2, Eigen::Dynamic> PolaritonDecomposition::reconstruct() const {
  const auto n = spin_modes.rows();
  Eigen::Matrix<Complex, 2, Eigen::Dynamic> lambda =
      Eigen::Matrix<Complex, 2, Eigen::Dynamic>::Zero(2, n);
  lambda(0, 0) = lambda_plus;
  if (n > 1) lambda(1, 1) = lambda_minus;
  return cavity_modes * lambda * spin_modes.adjoint();
}

namespace {

// Rotates a vector so that its first significant component is real positive.
template <typename Vec>
void fix_phase(Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      return;
    }
  }
}

}  // namespace

PolaritonDecomposition polariton_decomposition(const CouplingMatrix& coupling) {
  const ComplexMatrix g = coupling.matrix;
  const auto n = g.cols();
  Eigen::JacobiSVD<ComplexMatrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& values = svd.singularValues();

  PolaritonDecomposition out;
  out.structure_factor = structure_factor(coupling);
  out.collective_coupling = std::sqrt(std::max(0.0, g.row(0).squaredNorm()));
  out.lambda_plus = values(0);
  out.lambda_minus = n > 1 ? values(1) : 0.0;

  const double scale = out.collective_coupling;
  const double tol = kDegeneracyTolerance * (scale > 0.0 ? scale : 1.0);
  out.rank = static_cast<std::size_t>((out.lambda_plus > tol) + (out.lambda_minus > tol));
  out.degenerate = n > 1 && std::abs(out.lambda_plus - out.lambda_minus) < tol;

  Eigen::Matrix2cd u = svd.matrixU();
  ComplexMatrix w = svd.matrixV();
  if (out.degenerate) {
    const double r = 1.0 / std::numbers::sqrt2;
    u << r, r, r, -r;
  } else {
    for (int j = 0; j < 2; ++j) {
      Eigen::Vector2cd col = u.col(j);
      fix_phase(col);
      u.col(j) = col;
    }
  }
  const double lambdas[2] = {out.lambda_plus, out.lambda_minus};
  for (int j = 0; j < std::min<Eigen::Index>(2, n); ++j) {
    if (lambdas[j] > tol) {
      w.col(j) = g.adjoint() * u.col(j) / lambdas[j];
    } else {
      ComplexVector col = w.col(j);
      fix_phase(col);
      w.col(j) = col;
    }
  }
  out.cavity_modes = u;
  out.spin_modes = std::move(w);
  return out;
}

CollectiveModes collective_modes(const PolaritonDecomposition& decomposition) {
  if (decomposition.spin_count() < 2) {
    throw DomainError("collective modes need at least two spins");
  }
  CollectiveModes out;
  out.cavity_plus = decomposition.cavity_modes.col(0);
  out.cavity_minus = decomposition.cavity_modes.col(1);
  out.spin_plus = decomposition.spin_modes.col(0);
  out.spin_minus = decomposition.spin_modes.col(1);
  out.degenerate = decomposition.degenerate;
  return out;
}

std::vector<ComplexVector> dark_state_basis(const PolaritonDecomposition& decomposition) {
  std::vector<ComplexVector> out;
  const auto n = static_cast<std::size_t>(decomposition.spin_modes.cols());
  for (std::size_t j = decomposition.rank; j < n; ++j) {
    out.emplace_back(decomposition.spin_modes.col(static_cast<Eigen::Index>(j)));
  }
  return out;
}

namespace {

double polariton_gap(std::vector<double> levels, std::size_t spin_count, double dark_level) {
  if (spin_count < 2) return std::numeric_limits<double>::infinity();
  // Drop the N-2 levels nearest the bare spin frequency (the dark states).
  for (std::size_t k = 0; k + 2 < spin_count; ++k) {
    auto nearest = std::min_element(levels.begin(), levels.end(), [&](double a, double b) {
      return std::abs(a - dark_level) < std::abs(b - dark_level);
    });
    levels.erase(nearest);
  }
  std::sort(levels.begin(), levels.end());
  return (levels[1] - levels[0]) + (levels[3] - levels[2]);
}

}  // namespace

SpectrumTable energy_spectrum_sweep(const SystemSpec& templ,
                                    const std::vector<double>& interval_phases,
                                    const std::vector<double>& detunings,
                                    std::size_t workers) {
  if (interval_phases.empty() || detunings.empty()) {
    throw DomainError("spectrum sweep grids must be non-empty");
  }
  SpectrumTable table;
  table.spin_count = templ.spin_count();
  table.interval_phases = interval_phases;
  table.detunings = detunings;
  const std::size_t rows = interval_phases.size() * detunings.size();
  table.eigenvalues.resize(rows);
  table.polariton_gap.resize(rows);

  const std::size_t n = templ.spin_count();
  const double omega_a = templ.spins().base_frequency();
  parallel_for(rows, resolve_worker_count(workers), [&](std::size_t r) {
    const double dphi = interval_phases[r / detunings.size()];
    const double delta = detunings[r % detunings.size()];
    const auto base = SpinArray::uniform(n, dphi, omega_a);
    const auto spins =
        base.with_detunings(std::vector<DetuningSchedule>(n, DetuningSchedule::constant(delta)));
    const auto h = build_single_excitation_hamiltonian(templ.with_spins(spins), 0.0);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    std::vector<double> levels(ev.data(), ev.data() + ev.size());
    table.polariton_gap[r] = polariton_gap(levels, n, omega_a + delta);
    table.eigenvalues[r] = std::move(levels);
  });
  return table;
}

std::vector<double> find_polariton_degeneracies(const SpectrumTable& table,
                                                std::size_t detuning_index) {
  if (detuning_index >= table.detunings.size()) {
    throw IndexError("detuning index out of range");
  }
  const std::size_t count = table.interval_phases.size();
  std::vector<double> gap(count);
  double scale = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    gap[i] = table.polariton_gap[table.row_index(i, detuning_index)];
    if (std::isfinite(gap[i])) scale = std::max(scale, gap[i]);
  }
  const double tol = kDegeneracyTolerance * std::max(scale, 1.0);

  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::isfinite(gap[i])) continue;
    bool hit = gap[i] <= tol;
    if (!hit && i > 0 && i + 1 < count && gap[i] <= gap[i - 1] && gap[i] <= gap[i + 1]) {
      // A root between grid points leaves a V-shaped minimum: its depth is
      // bounded by one step of the linear slope on either side.
      const double slope_step = std::max(gap[i - 1] - gap[i], gap[i + 1] - gap[i]);
      hit = gap[i] <= slope_step + tol;
    }
    if (hit) hits.push_back(i);
  }

  std::vector<double> out;
  for (std::size_t k = 0; k < hits.size();) {
    std::size_t end = k + 1;
    while (end < hits.size() && hits[end] == hits[end - 1] + 1) ++end;
    double sum = 0.0;
    for (std::size_t q = k; q < end; ++q) sum += table.interval_phases[hits[q]];
    out.push_back(sum / static_cast<double>(end - k));
    k = end;
  }
  return out;
}

double effective_coupling_scale(const SystemSpec& spec, CouplingNormalization normalization) {
  const double g = normalization == CouplingNormalization::PerSpin
                       ? spec.coupling()
                       : spec.collective_coupling();
  return 2.0 * g * g;
}

double effective_coupling(const SystemSpec& spec, std::size_t i, std::size_t j,
                          CouplingNormalization normalization) {
  const std::size_t n = spec.spin_count();
  if (i >= n || j >= n) throw IndexError("spin index out of range");
  if (i == j) throw IndexError("effective coupling needs two distinct spins");
  const double dphi = spec.spins().phase(i) - spec.spins().phase(j);
  return effective_coupling_scale(spec, normalization) * std::cos(dphi);
}

double platform_coupling(double cooperativity, double spin_linewidth, double cavity_linewidth) {
  for (double v : {cooperativity, spin_linewidth, cavity_linewidth}) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw DomainError("cooperativity and linewidths must be positive and finite");
    }
  }
  return std::sqrt(cooperativity * spin_linewidth * cavity_linewidth) / 2.0;
}

}  // namespace ringcav
