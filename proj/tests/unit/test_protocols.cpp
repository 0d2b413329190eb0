#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ringcav/errors.hpp"
#include "ringcav/protocols.hpp"

using namespace ringcav;
using std::numbers::pi;

namespace {

double period_from_crossings(const std::vector<double>& t, const std::vector<double>& y) {
  // Mean spacing of downward crossings through the midline.
  const double lo = *std::min_element(y.begin(), y.end());
  const double hi = *std::max_element(y.begin(), y.end());
  const double mid = (lo + hi) / 2;
  std::vector<double> crossings;
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i - 1] >= mid && y[i] < mid) {
      const double f = (y[i - 1] - mid) / (y[i - 1] - y[i]);
      crossings.push_back(t[i - 1] + f * (t[i] - t[i - 1]));
    }
  }
  if (crossings.size() < 2) return 0.0;
  return (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
}

}  // namespace

TEST(Transport, QuarterWaveIsolatesOddSpins) {
  for (double dphi : {pi / 2, 3 * pi / 2}) {
    const auto report = run_transport(dphi);
    EXPECT_TRUE(report.passed());
    EXPECT_LT(report.check("odd_spins_isolated").value, 1e-8);
  }
}

TEST(Transport, InPhaseChainInvolvesEverySpin) {
  const auto report = run_transport(0.0);
  EXPECT_TRUE(report.passed());
  EXPECT_GT(report.check("spin_1_participates").value, 0.01);
  EXPECT_GT(report.check("spin_3_participates").value, 0.01);
}

TEST(Transfer, ReachesTargetAndBalancesModes) {
  const auto report = run_entangled_transfer(0.0);
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.target("psi1").max_fidelity, 0.999);
  // Frozen at the default sampling (dt 1e-3, stride 100).
  EXPECT_NEAR(report.target("psi1").max_fidelity, 0.999693, 1e-6);
  EXPECT_NEAR(report.target("psi1").time_at_max, 9.4, 1e-9);
  EXPECT_LT(report.check("modes_balanced").value, 1e-8);
}

TEST(Transfer, DirectionalVariantsUseOneMode) {
  const auto cw = run_entangled_transfer(pi / 2);
  EXPECT_LT(cw.check("ccw_mode_silent").value, 1e-8);
  EXPECT_GE(cw.target("psi1").max_fidelity, 0.999);
  double max_cw = 0.0;
  for (const auto& s : cw.trajectory.samples) max_cw = std::max(max_cw, s.n_cw);
  EXPECT_GT(max_cw, 0.1);

  const auto ccw = run_entangled_transfer(-pi / 2);
  EXPECT_LT(ccw.check("cw_mode_silent").value, 1e-8);
  EXPECT_GE(ccw.target("psi1").max_fidelity, 0.999);
}

TEST(Transfer, GroupsOscillateInSync) {
  const auto report = run_entangled_transfer(0.0);
  const auto t = report.trajectory.times();
  std::vector<double> even(t.size());
  std::vector<double> odd(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& p = report.trajectory.samples[i].spin_populations;
    even[i] = p[0] + p[2];
    odd[i] = p[1] + p[3];
  }
  const double te = period_from_crossings(t, even);
  const double to = period_from_crossings(t, odd);
  ASSERT_GT(te, 0.0);
  EXPECT_NEAR(te / to, 1.0, 1e-3);
}

TEST(Transfer, OddChainIsRefused) {
  EXPECT_THROW(make_scenario_config(scenario_id::kTransfer, {{"n", "5"}}), ProtocolNotApplicable);
}

TEST(Transfer, DetunedTargetPairClosesTheGate) {
  const auto report = run_entangled_transfer(0.0, 10.0);
  EXPECT_LT(report.target("psi1").max_fidelity, 0.01);
  EXPECT_TRUE(report.check("gate_closed").passed);
  // The 0.1% level is recorded but does not gate.
  const auto& strict = report.check("gate_closed_strict");
  EXPECT_FALSE(strict.spec.gating);
  EXPECT_NEAR(strict.value, report.target("psi1").max_fidelity, 0.0);
}

TEST(MultiExcitation, NonMaximalTransferKeepsGroupBudgets) {
  const auto report = run_nonmaximal_and_two_excitation(MultiExcitationVariant::NonMaximal);
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.target("psi1").max_fidelity, 0.999);
  for (const auto& s : report.trajectory.samples) {
    const auto& p = s.spin_populations;
    if (s.n_cw + s.n_ccw < 1e-6) {
      EXPECT_NEAR(p[0] + p[2], 0.36, 1e-5);
      EXPECT_NEAR(p[1] + p[3], 0.64, 1e-5);
    }
  }
}

TEST(MultiExcitation, TwoExcitationTransfer) {
  const auto report = run_nonmaximal_and_two_excitation(MultiExcitationVariant::TwoExcitation, 2);
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.target("psi1").max_fidelity, 0.99);
  EXPECT_LT(report.check("groups_isolated").value, 1e-8);
  EXPECT_LT(report.check("cutoff_insensitive").value, 1e-10);
  EXPECT_EQ(report.config.basis.dimension(), 144u);
}

TEST(MultiExcitation, CutoffBelowTwoIsRejected) {
  EXPECT_THROW(run_nonmaximal_and_two_excitation(MultiExcitationVariant::TwoExcitation, 1),
               BasisError);
}

TEST(Remote, SixSpinTransferOutcome) {
  const auto report = run_remote_transfer_six_spins();
  const auto& minus = report.target("psi05_minus");
  const auto& plus = report.target("psi05_plus");
  EXPECT_GT(minus.max_fidelity, plus.max_fidelity);
  EXPECT_GT(report.check("minus_sign_preferred").value, 0.0);
  // Frozen outcome; the gating thresholds (0.999, 1e-3) are not reached.
  EXPECT_NEAR(minus.max_fidelity, 0.998213, 1e-6);
  EXPECT_NEAR(report.check("detuned_pair_frozen").value, 0.0019556, 1e-6);
  EXPECT_FALSE(report.check("psi05_max_fidelity").passed);
}

TEST(Stirap, FinalFidelityIsReported) {
  const auto report = run_stirap(10.0, 10.0);
  EXPECT_EQ(report.trajectory.samples.back().t, 10.0);
  EXPECT_EQ(report.target("psi1").final_fidelity,
            report.trajectory.samples.back().fidelities[0]);
  EXPECT_NEAR(report.target("psi1").final_fidelity, 0.261692, 1e-6);
  EXPECT_TRUE(report.check("even_group_conserved").passed);
  EXPECT_TRUE(report.check("odd_group_conserved").passed);
}

TEST(Stirap, ZeroDetuningReducesToFreeTransfer) {
  const auto stirap = run_stirap(0.0, 0.0);
  const auto free = run_entangled_transfer(0.0);
  EXPECT_NEAR(stirap.target("psi1").final_fidelity, free.target("psi1").final_fidelity, 1e-12);
}

TEST(Stirap, RatioGridChecksUseRobustThreshold) {
  const auto config = make_scenario_config(scenario_id::kStirap, {{"delta1", "14"}});
  ASSERT_FALSE(config.checks.empty());
  EXPECT_EQ(config.checks.front().threshold, thresholds::kStirapRobustFidelity);
  const auto outside = make_scenario_config(scenario_id::kStirap, {{"delta1", "20"}});
  for (const auto& c : outside.checks) EXPECT_NE(c.metric, MetricKind::TargetFinalFidelity);
}

TEST(ScenarioConfig, UnknownParametersAndIdsAreRejected) {
  EXPECT_THROW(make_scenario_config("nope"), ConfigError);
  EXPECT_THROW(make_scenario_config(scenario_id::kTransport, {{"coupling_stregth", "1"}}),
               ConfigError);
  EXPECT_THROW(make_scenario_config(scenario_id::kGateSweep), ConfigError);
  EXPECT_THROW(make_scenario_config(scenario_id::kTransport, {{"dphi", "pie"}}), ConfigError);
}

TEST(ScenarioConfig, CustomChecksAreValidated) {
  auto config = make_scenario_config(scenario_id::kTransfer);
  config.checks.push_back(CheckSpec{"bad", MetricKind::TargetMaxFidelity, "missing"});
  EXPECT_THROW(run_scenario(config), ConfigError);
}

TEST(ScenarioReport, ThresholdsTravelWithOutcomes) {
  const auto report = run_entangled_transfer(0.0);
  const auto& c = report.check("psi1_max_fidelity");
  EXPECT_EQ(c.spec.threshold, 0.999);
  EXPECT_EQ(c.spec.op, Comparison::GreaterEqual);
  EXPECT_THROW(report.check("nope"), IndexError);
  EXPECT_THROW(report.target("nope"), IndexError);
}

TEST(Metrics, NamesRoundTrip) {
  for (auto kind : {MetricKind::TargetMaxFidelity, MetricKind::TargetFinalFidelity,
                    MetricKind::MaxSpinPopulation, MetricKind::MaxPhotonNumber,
                    MetricKind::MaxModeImbalance, MetricKind::GroupBudgetViolation,
                    MetricKind::MaxGroupDoubleOccupancy, MetricKind::PeakFidelityMargin,
                    MetricKind::MaxNormDeviation, MetricKind::CutoffInsensitivity}) {
    EXPECT_EQ(parse_metric(metric_name(kind)), kind);
  }
  EXPECT_THROW(parse_metric("fidelity"), ConfigError);
  EXPECT_TRUE(compare(1.0, parse_comparison(">="), 1.0));
  EXPECT_FALSE(compare(1.0, parse_comparison("<"), 1.0));
}
