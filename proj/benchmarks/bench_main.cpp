#include "bellsim/bases.hpp"
#include "bellsim/beamsplitter.hpp"
#include "bellsim/information.hpp"
#include "bellsim/sweep.hpp"
#include "bellsim/teleport.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

namespace {

using namespace bellsim;

const BeamsplitterParams kBalanced{std::numbers::pi / 4.0, std::numbers::pi / 4.0};

void BM_build_transform(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_transform(kBalanced));
  }
}
BENCHMARK(BM_build_transform);

void BM_transmit(benchmark::State& state) {
  const MeasurementBasis bell = bell_basis();
  const ModeTransform u = build_transform(kBalanced);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transmit(bell.states[kPsiMinus], u));
  }
}
BENCHMARK(BM_transmit);

void BM_info_gain(benchmark::State& state) {
  const MeasurementBasis bell = bell_basis();
  for (auto _ : state) {
    benchmark::DoNotOptimize(info_gain(bell, kBalanced));
  }
}
BENCHMARK(BM_info_gain);

void BM_averaged_fidelity(benchmark::State& state) {
  const Quadrature quad{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        averaged_fidelity(kBalanced, TieBreak::kLowestIndex, InputMeasure::kPolarUniform, quad));
  }
}
BENCHMARK(BM_averaged_fidelity)->Args({4, 8})->Args({16, 32});

void BM_info_gain_sweep(benchmark::State& state) {
  SweepGrid grid;
  grid.axis1.n = static_cast<int>(state.range(0));
  grid.axis2.n = grid.axis1.n;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_info_gain(grid, BasisKind::kBell, std::nullopt));
  }
}
BENCHMARK(BM_info_gain_sweep)->Arg(21)->Arg(41);

}  // namespace

BENCHMARK_MAIN();
