#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ringcav/angle.hpp"
#include "ringcav/errors.hpp"
#include "ringcav/hamiltonian.hpp"
#include "ringcav/spectral.hpp"

using namespace ringcav;
using std::numbers::pi;

namespace {

PolaritonDecomposition decompose(std::size_t n, double dphi) {
  return polariton_decomposition(build_coupling_matrix(SystemSpec::uniform_chain(n, dphi)));
}

// Projection of v onto the span of the columns of `basis`.
double residual_outside(const ComplexVector& v, const std::vector<ComplexVector>& basis) {
  ComplexVector r = v;
  for (const auto& b : basis) r -= b.dot(v) * b;
  return r.norm();
}

}  // namespace

TEST(StructureFactor, Examples) {
  EXPECT_NEAR(std::abs(structure_factor(4, 0.0) - Complex(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(structure_factor(4, pi / 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(structure_factor(3, pi / 3)), 0.0, 1e-15);
}

TEST(StructureFactor, FromCouplingMatrixAgreesWithDirectSum) {
  for (double dphi : {0.0, 0.3, pi / 5, 1.9}) {
    const auto g = build_coupling_matrix(SystemSpec::uniform_chain(6, dphi));
    EXPECT_NEAR(std::abs(structure_factor(g)), oracle::structure_factor_modulus(6, dphi), 1e-13);
  }
}

TEST(Polariton, InPhaseChainHasOneDarkPolariton) {
  const auto d = decompose(4, 0.0);
  EXPECT_NEAR(d.lambda_plus, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(d.lambda_minus, 0.0, 1e-12);
  EXPECT_EQ(d.rank, 1u);
}

TEST(Polariton, QuarterWaveChainIsDegenerate) {
  const auto d = decompose(4, pi / 2);
  EXPECT_NEAR(d.lambda_plus, 1.0, 1e-12);
  EXPECT_NEAR(d.lambda_minus, 1.0, 1e-12);
  EXPECT_TRUE(d.degenerate);
}

TEST(Polariton, MatchesClosedFormForRandomChains) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> phase(0.0, pi);
  std::uniform_int_distribution<int> count(1, 10);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = count(rng);
    const double dphi = phase(rng);
    const auto d = decompose(static_cast<std::size_t>(n), dphi);
    const double s = oracle::structure_factor_modulus(n, dphi);
    worst = std::max(worst, std::abs(d.lambda_plus - std::sqrt(1 + s)));
    if (n >= 2) worst = std::max(worst, std::abs(d.lambda_minus - std::sqrt(std::max(0.0, 1 - s))));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(Polariton, FactorsAreUnitaryAndReconstruct) {
  for (double dphi : {0.0, 0.4, pi / 3, pi / 2, 2.0}) {
    const auto g = build_coupling_matrix(SystemSpec::uniform_chain(5, dphi));
    const auto d = polariton_decomposition(g);
    EXPECT_GE(d.lambda_plus, d.lambda_minus);
    EXPECT_GE(d.lambda_minus, 0.0);
    const Eigen::Matrix2cd uu = d.cavity_modes.adjoint() * d.cavity_modes;
    EXPECT_LT((uu - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    const ComplexMatrix ww = d.spin_modes.adjoint() * d.spin_modes;
    EXPECT_LT((ww - ComplexMatrix::Identity(5, 5)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((d.reconstruct() - g.matrix).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(CollectiveModes, QuarterWaveGroupsEvenAndOddSpins) {
  const auto modes = collective_modes(decompose(4, pi / 2));
  EXPECT_TRUE(modes.degenerate);
  // Span of {A+, A-} must equal span{(1,0,-1,0), (0,1,0,-1)}/sqrt2.
  ComplexVector even = ComplexVector::Zero(4);
  even(0) = 1 / std::sqrt(2.0);
  even(2) = -1 / std::sqrt(2.0);
  ComplexVector odd = ComplexVector::Zero(4);
  odd(1) = 1 / std::sqrt(2.0);
  odd(3) = -1 / std::sqrt(2.0);
  EXPECT_LT(residual_outside(modes.spin_plus, {even, odd}), 1e-12);
  EXPECT_LT(residual_outside(modes.spin_minus, {even, odd}), 1e-12);
  // With the canonical cavity basis each collective mode sits in one group.
  const bool plus_even = std::abs(modes.spin_plus(0)) > 0.5;
  const ComplexVector& e = plus_even ? modes.spin_plus : modes.spin_minus;
  const ComplexVector& o = plus_even ? modes.spin_minus : modes.spin_plus;
  EXPECT_LT(std::abs(e(1)) + std::abs(e(3)), 1e-12);
  EXPECT_LT(std::abs(o(0)) + std::abs(o(2)), 1e-12);
  EXPECT_NEAR(std::abs(e(0) + e(2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(o(1) + o(3)), 0.0, 1e-12);
}

TEST(CollectiveModes, TwoSpinsInPhaseHaveOneBrightMode) {
  const auto d = decompose(2, 0.0);
  const auto modes = collective_modes(d);
  EXPECT_NEAR(std::abs(modes.spin_plus(0)), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(modes.spin_plus(1)), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(modes.spin_plus(0) - modes.spin_plus(1)), 0.0, 1e-12);
  EXPECT_NEAR(d.lambda_minus, 0.0, 1e-12);
}

TEST(CollectiveModes, RequireTwoSpins) {
  EXPECT_THROW(collective_modes(decompose(1, 0.0)), DomainError);
}

TEST(DarkStates, CountsAndDecoupling) {
  struct Case {
    std::size_t n;
    double dphi;
    std::size_t dark;
  };
  for (const auto& c : {Case{4, pi / 2, 2}, Case{4, 0.0, 3}, Case{2, pi / 2, 0}, Case{6, 0.7, 4}}) {
    const auto g = build_coupling_matrix(SystemSpec::uniform_chain(c.n, c.dphi));
    const auto d = polariton_decomposition(g);
    const auto dark = dark_state_basis(d);
    ASSERT_EQ(dark.size(), c.dark) << "N=" << c.n << " dphi=" << c.dphi;
    const auto modes = c.n >= 2 ? collective_modes(d) : CollectiveModes{};
    for (std::size_t i = 0; i < dark.size(); ++i) {
      EXPECT_LT((g.matrix * dark[i]).norm(), 1e-10);
      EXPECT_NEAR(dark[i].norm(), 1.0, 1e-12);
      for (std::size_t j = 0; j < i; ++j) EXPECT_LT(std::abs(dark[i].dot(dark[j])), 1e-12);
      EXPECT_LT(std::abs(dark[i].dot(modes.spin_plus)), 1e-12);
      if (d.lambda_minus > 1e-9) EXPECT_LT(std::abs(dark[i].dot(modes.spin_minus)), 1e-12);
    }
  }
}

TEST(DarkStates, HamiltonianIsDiagonalOnDarkSubspace) {
  const double delta = 0.8;
  const auto spins = SpinArray::uniform(5, 0.6).with_detunings(
      std::vector<DetuningSchedule>(5, DetuningSchedule::constant(delta)));
  const auto spec = SystemSpec::with_collective_coupling(spins, CavityPair{}, 1.0);
  const auto h = build_single_excitation_hamiltonian(spec, 0.0).matrix;
  const auto dark = dark_state_basis(polariton_decomposition(build_coupling_matrix(spec)));
  for (const auto& v : dark) {
    ComplexVector full = ComplexVector::Zero(7);
    full.tail(5) = v;
    const ComplexVector hv = h * full;
    EXPECT_LT((hv - delta * full).norm(), 1e-12);
  }
}

TEST(SpectrumSweep, InPhaseLevels) {
  const auto table =
      energy_spectrum_sweep(SystemSpec::uniform_chain(4, 0.0), {0.0}, {0.0}, 1);
  ASSERT_EQ(table.rows(), 1u);
  const auto& ev = table.eigenvalues[0];
  ASSERT_EQ(ev.size(), 6u);
  EXPECT_NEAR(ev[0], -std::sqrt(2.0), 1e-12);
  for (int k = 1; k < 5; ++k) EXPECT_NEAR(ev[k], 0.0, 1e-12);
  EXPECT_NEAR(ev[5], std::sqrt(2.0), 1e-12);
}

TEST(SpectrumSweep, DegeneraciesAtMultiplesOfPiOverN) {
  const auto phases = linspace(0.0, pi, 401);
  const auto detunings = linspace(-5.0, 5.0, 5);
  const double step = phases[1] - phases[0];
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto table = energy_spectrum_sweep(SystemSpec::uniform_chain(n, 0.0), phases, detunings, 2);
    for (std::size_t j = 0; j < detunings.size(); ++j) {
      const auto hits = find_polariton_degeneracies(table, j);
      ASSERT_EQ(hits.size(), n - 1) << "N=" << n << " Delta_a=" << detunings[j];
      for (std::size_t k = 0; k < hits.size(); ++k) {
        EXPECT_NEAR(hits[k], static_cast<double>(k + 1) * pi / static_cast<double>(n), step);
      }
    }
  }
}

TEST(SpectrumSweep, OutputIndependentOfWorkerCount) {
  const auto phases = linspace(0.0, pi, 60);
  const auto detunings = linspace(-2.0, 2.0, 7);
  const auto spec = SystemSpec::uniform_chain(5, 0.0);
  const auto a = energy_spectrum_sweep(spec, phases, detunings, 1);
  const auto b = energy_spectrum_sweep(spec, phases, detunings, 4);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.polariton_gap, b.polariton_gap);
}

TEST(EffectiveCoupling, CosineStructure) {
  auto pair = [](double dphi) {
    return SystemSpec::with_collective_coupling(SpinArray({0.0, dphi}), CavityPair{}, 1.0);
  };
  const double j0 = effective_coupling(pair(0.0), 0, 1);
  EXPECT_NEAR(j0, 2 * pair(0.0).coupling() * pair(0.0).coupling(), 1e-15);
  EXPECT_NEAR(effective_coupling(pair(pi / 2), 0, 1), 0.0, 1e-12);
  EXPECT_NEAR(effective_coupling(pair(pi), 0, 1), -j0, 1e-15);
  EXPECT_NEAR(effective_coupling(pair(0.0), 0, 1, CouplingNormalization::Collective), 2.0, 1e-15);
  EXPECT_THROW(effective_coupling(pair(0.0), 1, 1), IndexError);
  EXPECT_THROW(effective_coupling(pair(0.0), 0, 2), IndexError);
}

TEST(EffectiveCoupling, NullsOnlyAtOddQuarterWaves) {
  for (int k = 0; k < 10000; ++k) {
    const double dphi = k * pi / 5000.0;
    const auto spec = SystemSpec::with_collective_coupling(SpinArray({0.0, dphi}), CavityPair{}, 1.0);
    const double j = std::abs(effective_coupling(spec, 0, 1));
    if (is_odd_multiple_of_half_pi(dphi, 1e-9)) {
      EXPECT_LT(j, 1e-12) << dphi;
    } else {
      EXPECT_GT(j, 1e-12) << dphi;
    }
  }
}

TEST(PlatformCoupling, Examples) {
  EXPECT_DOUBLE_EQ(platform_coupling(4, 1, 1), 1.0);
  const double two_pi = 2 * pi;
  const double g = platform_coupling(200, two_pi * 0.18e6, two_pi * 0.03e6);
  EXPECT_NEAR(g / two_pi / 1e6, 0.52, 0.005);
  EXPECT_NEAR(2 * g / two_pi / 1e6, 1.04, 0.01);
  EXPECT_THROW(platform_coupling(0, 1, 1), DomainError);
  EXPECT_THROW(platform_coupling(1, -1, 1), DomainError);
  EXPECT_THROW(platform_coupling(1, 1, std::nan("")), DomainError);
}
