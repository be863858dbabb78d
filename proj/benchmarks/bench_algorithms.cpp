#include <benchmark/benchmark.h>

#include <numbers>

#include "qiso/grover.hpp"
#include "qiso/shor.hpp"

using namespace qiso;

static void BM_GroverNoisyRun(benchmark::State& state) {
  GroverConfig cfg{std::size_t(state.range(0)), 0,
                   2 * GroverConfig::optimal_steps(state.range(0)),
                   GroverError::kLocalDepolarizing, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(grover_run(cfg));
}
BENCHMARK(BM_GroverNoisyRun)->Arg(4)->Arg(6);

static void BM_ShorPipeline(benchmark::State& state) {
  const PureState psi =
      PureState::bloch(std::numbers::pi / 2, std::numbers::pi / 4);
  shor_encode();  // warm the cached circuit operators
  for (auto _ : state) benchmark::DoNotOptimize(shor_run({psi, 0.1}));
}
BENCHMARK(BM_ShorPipeline);

static void BM_ShorCircuitBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(shor_decode_correct());
    benchmark::DoNotOptimize(shor_encode());
  }
}
BENCHMARK(BM_ShorCircuitBuild);
