#include "ringcav/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "ringcav/errors.hpp"
#include "ringcav/hamiltonian.hpp"

namespace ringcav {

void PropagatorSettings::validate() const {
  if (!std::isfinite(dt) || !(dt > 0.0)) throw DomainError("time step dt must be positive");
  if (stride == 0) throw DomainError("sampling stride must be at least 1");
}

namespace {

// Occupations of every basis vector, flattened for repeated population sums.
struct OccupationTable {
  std::size_t spin_count = 0;
  std::vector<double> n_cw;
  std::vector<double> n_ccw;
  std::vector<std::uint64_t> spins;  // bit m set when spin m is excited
};

OccupationTable occupation_table(const BasisSpec& basis) {
  OccupationTable table;
  const std::size_t dim = basis.dimension();
  const std::size_t n = basis.spin_count();
  table.spin_count = n;
  table.n_cw.resize(dim);
  table.n_ccw.resize(dim);
  table.spins.resize(dim);
  if (basis.kind() == BasisKind::SingleExcitation) {
    table.n_cw[0] = 1.0;
    table.n_ccw[1] = 1.0;
    for (std::size_t m = 0; m < n; ++m) table.spins[m + 2] = std::uint64_t{1} << m;
    return table;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    const auto label = basis.label_of(i);
    table.n_cw[i] = label.n_cw;
    table.n_ccw[i] = label.n_ccw;
    std::uint64_t bits = 0;
    for (std::size_t m = 0; m < n; ++m) {
      if (basis.spin_excited(label.spins, m)) bits |= std::uint64_t{1} << m;
    }
    table.spins[i] = bits;
  }
  return table;
}

Populations populations_from(const OccupationTable& table, const ComplexVector& psi) {
  Populations out;
  out.spins.assign(table.spin_count, 0.0);
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double p = std::norm(psi(i));
    if (p == 0.0) continue;
    const auto k = static_cast<std::size_t>(i);
    out.n_cw += table.n_cw[k] * p;
    out.n_ccw += table.n_ccw[k] * p;
    for (std::uint64_t bits = table.spins[k]; bits != 0; bits &= bits - 1) {
      out.spins[static_cast<std::size_t>(std::countr_zero(bits))] += p;
    }
  }
  return out;
}

ComplexMatrix unitary_step(const ComplexMatrix& h, double dt) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hamiltonian eigendecomposition failed");
  }
  const auto& vectors = solver.eigenvectors();
  ComplexVector phases(solver.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, -solver.eigenvalues()(k) * dt);
  }
  return vectors * phases.asDiagonal() * vectors.adjoint();
}

std::size_t step_count(double length, double dt) {
  const double q = length / dt;
  const double r = std::round(q);
  if (r >= 1.0 && std::abs(q - r) <= 1e-9 * std::max(1.0, q)) return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(q)));
}

}  // namespace

Populations populations(const QuantumState& state) {
  return populations_from(occupation_table(state.basis()), state.amplitudes());
}

double fidelity(const QuantumState& state, const QuantumState& target) {
  if (!(state.basis() == target.basis())) {
    throw BasisError("fidelity between states in different bases");
  }
  return std::norm(target.amplitudes().dot(state.amplitudes()));
}

std::vector<double> Trajectory::times() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.t);
  return out;
}

std::vector<double> Trajectory::spin_population(std::size_t m) const {
  if (m >= spin_count) throw IndexError("spin index out of range");
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.spin_populations[m]);
  return out;
}

std::vector<double> Trajectory::fidelity(std::size_t target) const {
  if (target >= target_names.size()) throw IndexError("target index out of range");
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.fidelities[target]);
  return out;
}

std::size_t Trajectory::target_index(const std::string& name) const {
  const auto it = std::find(target_names.begin(), target_names.end(), name);
  if (it == target_names.end()) throw IndexError("no target named '" + name + "'");
  return static_cast<std::size_t>(it - target_names.begin());
}

std::size_t Trajectory::observable_index(const std::string& name) const {
  const auto it = std::find(observable_names.begin(), observable_names.end(), name);
  if (it == observable_names.end()) throw IndexError("no observable named '" + name + "'");
  return static_cast<std::size_t>(it - observable_names.begin());
}

EvolutionResult evolve(const QuantumState& initial, const SystemSpec& spec,
                       const PropagatorSettings& settings, double t_final,
                       const std::vector<NamedState>& targets,
                       const std::vector<DiagonalObservable>& observables) {
  settings.validate();
  if (!std::isfinite(t_final) || t_final < 0.0) {
    throw DomainError("t_final must be finite and non-negative");
  }
  if (std::abs(initial.norm() - 1.0) > QuantumState::kNormTolerance) {
    throw NormalizationError("initial state is not normalized");
  }
  const BasisSpec& basis = initial.basis();
  if (basis.spin_count() != spec.spin_count()) {
    throw BasisError("initial state basis does not match the spin count");
  }
  for (const auto& target : targets) {
    if (!(target.state.basis() == basis)) {
      throw BasisError("target '" + target.name + "' lives in a different basis");
    }
  }
  for (const auto& obs : observables) {
    if (static_cast<std::size_t>(obs.weights.size()) != basis.dimension()) {
      throw BasisError("observable '" + obs.name + "' has the wrong dimension");
    }
  }
  std::vector<double> cuts{0.0};
  for (std::size_t m = 0; m < spec.spin_count(); ++m) {
    const auto& schedule = spec.spins().detuning(m);
    if (!schedule.covers(t_final)) {
      throw ScheduleDomainError("detuning schedule of spin " + std::to_string(m) +
                                " ends before t_final");
    }
    const auto b = schedule.breakpoints(t_final);
    cuts.insert(cuts.end(), b.begin(), b.end());
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(t_final);

  const auto occupations = occupation_table(basis);
  const RealVector excitations = excitation_number_diagonal(basis);

  EvolutionResult result{Trajectory{}, initial};
  Trajectory& traj = result.trajectory;
  traj.spin_count = spec.spin_count();
  traj.sample_spacing = settings.dt * static_cast<double>(settings.stride);
  for (const auto& t : targets) traj.target_names.push_back(t.name);
  for (const auto& o : observables) traj.observable_names.push_back(o.name);

  ComplexVector psi = initial.amplitudes();
  auto record = [&](double t) {
    TrajectorySample sample;
    sample.t = t;
    auto pops = populations_from(occupations, psi);
    sample.spin_populations = std::move(pops.spins);
    sample.n_cw = pops.n_cw;
    sample.n_ccw = pops.n_ccw;
    for (const auto& target : targets) {
      sample.fidelities.push_back(std::norm(target.state.amplitudes().dot(psi)));
    }
    const RealVector probabilities = psi.cwiseAbs2();
    for (const auto& obs : observables) sample.observables.push_back(obs.weights.dot(probabilities));
    sample.excitation_number = excitations.dot(probabilities);
    sample.norm = std::sqrt(probabilities.sum());
    traj.max_norm_deviation = std::max(traj.max_norm_deviation, std::abs(sample.norm - 1.0));
    traj.samples.push_back(std::move(sample));
  };

  record(0.0);
  std::size_t global_step = 0;
  for (std::size_t w = 0; w + 1 < cuts.size(); ++w) {
    const double a = cuts[w];
    const double b = cuts[w + 1];
    if (!(b > a)) continue;
    const std::size_t steps = step_count(b - a, settings.dt);
    const double h = (b - a) / static_cast<double>(steps);
    bool is_static = true;
    for (std::size_t m = 0; m < spec.spin_count() && is_static; ++m) {
      is_static = spec.spins().detuning(m).constant_on(a, b);
    }
    ComplexMatrix step;
    if (is_static) step = unitary_step(build_hamiltonian(spec, basis, 0.5 * (a + b)).matrix, h);
    for (std::size_t k = 0; k < steps; ++k) {
      if (!is_static) {
        const double mid = a + (static_cast<double>(k) + 0.5) * h;
        step = unitary_step(build_hamiltonian(spec, basis, mid).matrix, h);
      }
      psi = step * psi;
      ++global_step;
      const bool last = (w + 2 == cuts.size()) && (k + 1 == steps);
      if (last || global_step % settings.stride == 0) {
        record(k + 1 == steps ? b : a + static_cast<double>(k + 1) * h);
      }
    }
  }
  result.final_state = QuantumState::normalized(basis, psi);
  return result;
}

FidelityPeak max_fidelity_over_window(const Trajectory& trajectory, std::size_t target_index) {
  if (trajectory.empty()) throw EmptyTrajectoryError("trajectory has no samples");
  if (target_index >= trajectory.target_names.size()) {
    throw IndexError("target index out of range");
  }
  FidelityPeak peak{-1.0, 0.0};
  for (const auto& s : trajectory.samples) {
    if (s.fidelities[target_index] > peak.value) peak = {s.fidelities[target_index], s.t};
  }
  return peak;
}

double max_observable_difference(const Trajectory& a, const Trajectory& b) {
  if (a.size() != b.size() || a.spin_count != b.spin_count ||
      a.target_names.size() != b.target_names.size()) {
    throw NumericalError("trajectories are sampled differently");
  }
  double worst = 0.0;
  auto take = [&worst](double x, double y) { worst = std::max(worst, std::abs(x - y)); };
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& sa = a.samples[i];
    const auto& sb = b.samples[i];
    if (std::abs(sa.t - sb.t) > 1e-9 * std::max(1.0, std::abs(sa.t))) {
      throw NumericalError("trajectory sample times do not line up");
    }
    for (std::size_t m = 0; m < a.spin_count; ++m) take(sa.spin_populations[m], sb.spin_populations[m]);
    take(sa.n_cw, sb.n_cw);
    take(sa.n_ccw, sb.n_ccw);
    for (std::size_t k = 0; k < sa.fidelities.size(); ++k) take(sa.fidelities[k], sb.fidelities[k]);
  }
  return worst;
}

}  // namespace ringcav
