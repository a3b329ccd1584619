#include <benchmark/benchmark.h>

#include "qrgas/random.hpp"

using namespace qrgas;

static void BM_Uniform(benchmark::State& state) {
  Rng rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.uniform());
}
BENCHMARK(BM_Uniform);

static void BM_Normal(benchmark::State& state) {
  Rng rng(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.normal());
}
BENCHMARK(BM_Normal);

static void BM_Gamma(benchmark::State& state) {
  Rng rng(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.gamma(2.0));
}
BENCHMARK(BM_Gamma);

static void BM_UnitVector(benchmark::State& state) {
  Rng rng(4, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng.unit_vector());
}
BENCHMARK(BM_UnitVector);
