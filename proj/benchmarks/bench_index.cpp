#include <benchmark/benchmark.h>

#include "qiso/channels.hpp"
#include "qiso/isoindex.hpp"
#include "test_util.hpp"

using namespace qiso;

static void BM_IsotropicIndex(benchmark::State& state) {
  testing::Engine rng(10);
  const std::size_t n = state.range(0);
  const DensityMatrix rho = testing::random_density(rng, n);
  const PureState ref = testing::random_pure(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(isotropic_index(rho, ref));
}
BENCHMARK(BM_IsotropicIndex)->Arg(1)->Arg(2)->Arg(4);

static void BM_FidelityGeneral(benchmark::State& state) {
  testing::Engine rng(11);
  const std::size_t n = state.range(0);
  const DensityMatrix a = testing::random_density(rng, n);
  const DensityMatrix b = testing::random_density(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(a, b));
}
BENCHMARK(BM_FidelityGeneral)->Arg(2)->Arg(4);

static void BM_DepolarizeAllLocal(benchmark::State& state) {
  testing::Engine rng(12);
  const DensityMatrix rho = testing::random_density(rng, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(depolarize_all_local(rho, 0.1));
}
BENCHMARK(BM_DepolarizeAllLocal)->Arg(4)->Arg(9);
