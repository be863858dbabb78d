#include <benchmark/benchmark.h>

#include "qiso/linalg.hpp"
#include "test_util.hpp"

using namespace qiso;

static void BM_Eigh(benchmark::State& state) {
  testing::Engine rng(1);
  const ComplexMatrix h = testing::random_hermitian(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eigh(h));
}
BENCHMARK(BM_Eigh)->Arg(4)->Arg(16)->Arg(64);

static void BM_DenseProduct(benchmark::State& state) {
  testing::Engine rng(2);
  const std::size_t n = state.range(0);
  const ComplexMatrix a = testing::random_matrix(rng, n, n);
  const ComplexMatrix b = testing::random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_DenseProduct)->Arg(64)->Arg(256)->Arg(512);

static void BM_PartialTrace(benchmark::State& state) {
  testing::Engine rng(3);
  const ComplexMatrix m = testing::random_psd_unit_trace(rng, 512);
  const std::vector<std::size_t> keep{0};
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(m, keep));
}
BENCHMARK(BM_PartialTrace);

static void BM_MatSqrtPsd(benchmark::State& state) {
  testing::Engine rng(4);
  const ComplexMatrix m = testing::random_psd_unit_trace(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mat_sqrt_psd(m));
}
BENCHMARK(BM_MatSqrtPsd)->Arg(4)->Arg(16);
