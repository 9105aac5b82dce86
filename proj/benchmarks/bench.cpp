// Microbenchmarks for the hot paths of the Monte Carlo driver.

#include <benchmark/benchmark.h>

#include "qstore/analysis.hpp"

using namespace qstore;

static void BM_ProjectMeasure(benchmark::State& state) {
  RandomSource rng(1);
  const StateVec s = StateVec::from_amplitudes(
      {cplx(0.6, 0), cplx(0.0, 0), cplx(0.8, 0), cplx(0.0, 0)});
  const Projector p = subspace_projector(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_measure(s, p, rng));
  }
}
BENCHMARK(BM_ProjectMeasure);

static void BM_StoreReadCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RandomSource rng(2);
  for (auto _ : state) {
    const BitString c = random_bits(n, rng);
    auto [bank, key] = store(c, rng);
    auto read = read_bank(bank, rng);
    benchmark::DoNotOptimize(check_bank(read.second, key, rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_StoreReadCheck)->Arg(16)->Arg(256)->Arg(1024);

static void BM_GuessForgeryTrial(benchmark::State& state) {
  std::uint64_t t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mc_forgery_pass_rate(GuessForge{}, 1, 100, t++));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_GuessForgeryTrial);

static void BM_MeasureResendTrial(benchmark::State& state) {
  std::uint64_t t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mc_forgery_pass_rate(MeasureResend{0.3}, 1, 100, t++));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_MeasureResendTrial);

BENCHMARK_MAIN();
