#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ringcav/dynamics.hpp"
#include "ringcav/errors.hpp"
#include "ringcav/hamiltonian.hpp"

using namespace ringcav;
using std::numbers::pi;

namespace {

QuantumState spin_state(const BasisSpec& basis, std::vector<std::size_t> spins,
                        Complex coefficient = 1.0) {
  return QuantumState::from_terms(basis, {StateTerm{coefficient, {std::move(spins), 0, 0}}});
}

double max_over(const Trajectory& traj, std::size_t m) {
  double worst = 0.0;
  for (const auto& s : traj.samples) worst = std::max(worst, s.spin_populations[m]);
  return worst;
}

}  // namespace

TEST(Evolve, SingleSpinRabiOscillation) {
  const SystemSpec spec(SpinArray({0.0}), CavityPair{}, 1.0);
  const auto basis = BasisSpec::single_excitation(1);
  const PropagatorSettings settings{1e-3, 10};
  const auto result = evolve(spin_state(basis, {0}), spec, settings, 3.0);
  for (const auto& s : result.trajectory.samples) {
    const double c = std::cos(std::sqrt(2.0) * s.t);
    EXPECT_NEAR(s.spin_populations[0], c * c, 1e-10) << "t=" << s.t;
  }
  const double t_zero = pi / (2 * std::sqrt(2.0));
  const auto at_zero = evolve(spin_state(basis, {0}), spec, PropagatorSettings{t_zero / 1000, 1000},
                              t_zero);
  EXPECT_NEAR(at_zero.trajectory.samples.back().spin_populations[0], 0.0, 1e-12);
}

TEST(Evolve, ZeroCouplingKeepsPopulations) {
  const SystemSpec spec(SpinArray::uniform(3, 0.4), CavityPair{}, 0.0);
  const auto basis = BasisSpec::single_excitation(3);
  const auto init = QuantumState::from_terms(
      basis, {StateTerm{0.6, {{0}, 0, 0}}, StateTerm{Complex(0, 0.8), {{2}, 0, 0}}});
  const auto traj = evolve(init, spec, {}, 5.0).trajectory;
  for (const auto& s : traj.samples) {
    EXPECT_NEAR(s.spin_populations[0], 0.36, 1e-14);
    EXPECT_NEAR(s.spin_populations[2], 0.64, 1e-14);
  }
}

TEST(Evolve, QuarterWaveChainIsolatesOddSpins) {
  const auto spec = SystemSpec::uniform_chain(4, pi / 2);
  const auto basis = BasisSpec::single_excitation(4);
  const auto traj = evolve(spin_state(basis, {0}), spec, {}, 10.0).trajectory;
  EXPECT_LT(max_over(traj, 1), 1e-8);
  EXPECT_LT(max_over(traj, 3), 1e-8);
  EXPECT_GT(max_over(traj, 2), 0.5);
}

TEST(Evolve, SamplingGridAndBookkeeping) {
  const auto spec = SystemSpec::uniform_chain(4, 0.3);
  const auto basis = BasisSpec::single_excitation(4);
  const auto traj = evolve(spin_state(basis, {0}), spec, {}, 10.0).trajectory;
  ASSERT_EQ(traj.size(), 101u);
  EXPECT_EQ(traj.samples.front().t, 0.0);
  EXPECT_NEAR(traj.samples.back().t, 10.0, 1e-12);
  EXPECT_NEAR(traj.sample_spacing, 0.1, 1e-12);
  for (std::size_t i = 1; i < traj.size(); ++i) EXPECT_GT(traj.samples[i].t, traj.samples[i - 1].t);
  for (const auto& s : traj.samples) {
    double total = s.n_cw + s.n_ccw;
    for (double p : s.spin_populations) total += p;
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
  EXPECT_LT(traj.max_norm_deviation, 1e-10);
}

TEST(Evolve, EndsExactlyAtTFinalForUnalignedWindows) {
  const auto spec = SystemSpec::uniform_chain(2, 0.3);
  const auto basis = BasisSpec::single_excitation(2);
  const auto traj = evolve(spin_state(basis, {0}), spec, PropagatorSettings{1e-3, 100}, 0.12345).trajectory;
  EXPECT_DOUBLE_EQ(traj.samples.back().t, 0.12345);
}

TEST(Evolve, StaticStepsMatchOneShotExponential) {
  const auto spec = SystemSpec::uniform_chain(5, 0.9);
  const auto basis = BasisSpec::single_excitation(5);
  const auto init = spin_state(basis, {1});
  const auto stepped = evolve(init, spec, {}, 7.3).final_state;
  const auto h = build_single_excitation_hamiltonian(spec, 0.0).matrix;
  const ComplexVector exact = oracle::taylor_propagator(h, 7.3) * init.amplitudes();
  EXPECT_LT((stepped.amplitudes() - exact).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Evolve, RampedDetuningMatchesRungeKutta) {
  const auto ramp = DetuningSchedule::ramp(-4.0, 4.0, 5.0);
  const auto spins = SpinArray::uniform(3, pi / 2).with_detuning(0, ramp).with_detuning(1, ramp);
  const auto spec = SystemSpec::with_collective_coupling(spins, CavityPair{}, 1.0);
  const auto basis = BasisSpec::single_excitation(3);
  const auto init = spin_state(basis, {0});
  const PropagatorSettings coarse;
  const auto stepped = evolve(init, spec, coarse, 5.0).final_state;
  const auto fine = evolve(init, spec, coarse.halved(), 5.0).final_state;
  const std::vector<double> phases = spins.phases();
  const double g = spec.coupling();
  auto h = [&](double t) {
    return oracle::single_excitation_hamiltonian(phases, g, 0.0, 0.0, {ramp(t), ramp(t), 0.0});
  };
  const auto reference = oracle::rk4(h, init.amplitudes(), 5.0, 20000);
  const double err = (stepped.amplitudes() - reference).cwiseAbs().maxCoeff();
  const double err_fine = (fine.amplitudes() - reference).cwiseAbs().maxCoeff();
  EXPECT_LT(err, 1e-6);
  // Midpoint rule: halving dt cuts the error by about four.
  EXPECT_NEAR(err / err_fine, 4.0, 0.2);
}

TEST(Evolve, HalvedStepConverges) {
  const auto ramp = DetuningSchedule::ramp(-10.0, 10.0, 10.0);
  const auto spins = SpinArray::uniform(4, pi / 2).with_detuning(0, ramp).with_detuning(1, ramp);
  const auto spec = SystemSpec::with_collective_coupling(spins, CavityPair{}, 1.0);
  const auto basis = BasisSpec::single_excitation(4);
  const auto init = spin_state(basis, {0});
  const PropagatorSettings coarse;
  const auto a = evolve(init, spec, coarse, 10.0).trajectory;
  const auto b = evolve(init, spec, coarse.halved(), 10.0).trajectory;
  EXPECT_LT(max_observable_difference(a, b), 1e-8);
}

TEST(Evolve, TimeReversalReturnsInitialState) {
  const auto spec = SystemSpec::uniform_chain(4, 0.7);
  const auto basis = BasisSpec::single_excitation(4);
  const auto init = QuantumState::from_terms(
      basis, {StateTerm{1.0, {{0}, 0, 0}}, StateTerm{kI, {{3}, 0, 0}}});
  const auto forward = evolve(init, spec, {}, 6.0).final_state;
  // Negated phases give the conjugated Hamiltonian.
  const auto conjugated = SystemSpec::uniform_chain(4, -0.7);
  const QuantumState mirrored(basis, forward.amplitudes().conjugate());
  const auto back = evolve(mirrored, conjugated, {}, 6.0).final_state;
  const ComplexVector recovered = back.amplitudes().conjugate();
  EXPECT_LT((recovered - init.amplitudes()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Evolve, GlobalPhaseInvariance) {
  const auto spec = SystemSpec::uniform_chain(4, 0.4);
  const auto basis = BasisSpec::single_excitation(4);
  const auto target = spin_state(basis, {2});
  const auto a = evolve(spin_state(basis, {0}), spec, {}, 4.0, {{"t", target}}).trajectory;
  const auto b = evolve(spin_state(basis, {0}, std::polar(1.0, 1.234)), spec, {}, 4.0,
                        {{"t", target}}).trajectory;
  EXPECT_LT(max_observable_difference(a, b), 1e-14);
}

TEST(Evolve, FockRunConservesExcitationNumber) {
  const auto spec = SystemSpec::uniform_chain(3, 0.5);
  const auto basis = BasisSpec::fock(3, 2);
  const auto init = spin_state(basis, {0, 1});
  const auto traj = evolve(init, spec, {}, 5.0).trajectory;
  for (const auto& s : traj.samples) EXPECT_NEAR(s.excitation_number, 2.0, 1e-9);
}

TEST(Evolve, RejectsBadInput) {
  const auto spec = SystemSpec::uniform_chain(2, 0.0);
  const auto basis = BasisSpec::single_excitation(2);
  const auto init = spin_state(basis, {0});
  const auto short_spec = spec.with_spins(
      SpinArray::uniform(2, 0.0).with_detuning(0, DetuningSchedule::ramp(0, 1, 1)));
  EXPECT_THROW(evolve(init, short_spec, {}, 2.0), ScheduleDomainError);
  EXPECT_THROW(evolve(init, SystemSpec::uniform_chain(3, 0.0), {}, 1.0), BasisError);
  EXPECT_THROW(evolve(init, spec, PropagatorSettings{-1.0, 1}, 1.0), DomainError);
  const auto other = QuantumState::from_terms(BasisSpec::fock(2, 1), {StateTerm{1.0, {{0}, 0, 0}}});
  EXPECT_THROW(evolve(init, spec, {}, 1.0, {{"x", other}}), BasisError);
}

TEST(Populations, PhotonAndSpinStates) {
  const auto single = BasisSpec::single_excitation(3);
  const auto photon = QuantumState::from_terms(single, {StateTerm{1.0, {{}, 1, 0}}});
  const auto p = populations(photon);
  EXPECT_EQ(p.n_cw, 1.0);
  EXPECT_EQ(p.n_ccw, 0.0);
  for (double r : p.spins) EXPECT_EQ(r, 0.0);

  const auto pair = QuantumState::from_terms(
      single, {StateTerm{1.0, {{0}, 0, 0}}, StateTerm{1.0, {{1}, 0, 0}}});
  EXPECT_NEAR(populations(pair).spins[0], 0.5, 1e-15);
  EXPECT_NEAR(populations(pair).spins[1], 0.5, 1e-15);

  const auto fock = BasisSpec::fock(2, 3);
  const auto two = QuantumState::from_terms(fock, {StateTerm{1.0, {{}, 2, 0}}});
  EXPECT_EQ(populations(two).n_cw, 2.0);
}

TEST(Fidelity, OverlapAlgebra) {
  const auto basis = BasisSpec::single_excitation(2);
  const auto a = spin_state(basis, {0});
  const auto b = spin_state(basis, {1});
  const auto ab = QuantumState::from_terms(
      basis, {StateTerm{1.0, {{0}, 0, 0}}, StateTerm{1.0, {{1}, 0, 0}}});
  EXPECT_NEAR(fidelity(a, a), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(a, b), 0.0, 1e-15);
  EXPECT_NEAR(fidelity(ab, a), 0.5, 1e-15);
  EXPECT_THROW(fidelity(a, spin_state(BasisSpec::single_excitation(3), {0})), BasisError);
}

TEST(MaxFidelity, ConstantAndEmpty) {
  Trajectory traj;
  traj.spin_count = 1;
  traj.target_names = {"x"};
  for (double t : {0.0, 0.5, 1.0}) {
    TrajectorySample s;
    s.t = t;
    s.fidelities = {0.3};
    traj.samples.push_back(s);
  }
  const auto peak = max_fidelity_over_window(traj, 0);
  EXPECT_EQ(peak.value, 0.3);
  EXPECT_EQ(peak.time, 0.0);
  EXPECT_THROW(max_fidelity_over_window(traj, 1), IndexError);
  EXPECT_THROW(max_fidelity_over_window(Trajectory{}, 0), EmptyTrajectoryError);
}
