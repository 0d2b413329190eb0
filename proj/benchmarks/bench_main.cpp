#include <benchmark/benchmark.h>

#include <numbers>

#include "ringcav/dynamics.hpp"
#include "ringcav/hamiltonian.hpp"
#include "ringcav/spectral.hpp"

using namespace ringcav;

static void BM_SingleExcitationEvolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = SystemSpec::uniform_chain(n, std::numbers::pi / 3);
  const auto basis = BasisSpec::single_excitation(n);
  const auto init = QuantumState::from_terms(basis, {StateTerm{1.0, {{0}, 0, 0}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(init, spec, {}, 10.0).final_state);
  }
}
BENCHMARK(BM_SingleExcitationEvolve)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_RampedEvolve(benchmark::State& state) {
  const auto ramp = DetuningSchedule::ramp(-10.0, 10.0, 10.0);
  const auto spins = SpinArray::uniform(4, std::numbers::pi / 2).with_detuning(0, ramp).with_detuning(1, ramp);
  const auto spec = SystemSpec::with_collective_coupling(spins, CavityPair{}, 1.0);
  const auto basis = BasisSpec::single_excitation(4);
  const auto init = QuantumState::from_terms(basis, {StateTerm{1.0, {{0}, 0, 0}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(init, spec, {}, 10.0).final_state);
  }
}
BENCHMARK(BM_RampedEvolve)->Unit(benchmark::kMillisecond);

static void BM_FockBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spec = SystemSpec::uniform_chain(n, 0.4);
  const auto basis = BasisSpec::fock(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_fock_hamiltonian(spec, basis, 0.0).matrix);
  }
  state.counters["dim"] = static_cast<double>(basis.dimension());
}
BENCHMARK(BM_FockBuild)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SpectrumSweep(benchmark::State& state) {
  const auto spec = SystemSpec::uniform_chain(4, 0.0);
  std::vector<double> phases;
  for (int i = 0; i < 201; ++i) phases.push_back(std::numbers::pi * i / 200.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(energy_spectrum_sweep(spec, phases, {0.0}, 1));
  }
}
BENCHMARK(BM_SpectrumSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
