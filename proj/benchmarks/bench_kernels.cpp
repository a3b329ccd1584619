// Hot-path costs: kernel evaluation and the per-pair collision rate, adaptive
// vs fixed-rule paths.

#include <benchmark/benchmark.h>

#include "qrgas/dsmc.hpp"
#include "qrgas/kernel_integrals.hpp"
#include "qrgas/kinematics.hpp"
#include "qrgas/random.hpp"

using namespace qrgas;

namespace {

GasModel reference_model(double eps = 0.1) {
  GasModel m;
  m.m = 1.0;
  m.delta = 2.0;
  m.kappa_k = 0.5;
  m.kappa_i = -0.5;
  m.gamma = 3.0;
  m.C_B = 2.0;
  m.epsilon = eps;
  return m;
}

}  // namespace

static void BM_KernelQuasiResonant(benchmark::State& state) {
  const GasModel model = reference_model();
  Rng rng(1, 0);
  CollisionQuadruple q;
  q.v = {2, 0, 0};
  q.v_star = {0, 0, 0};
  q.I = 1.0;
  q.I_star = 1.0;
  q.I_prime = 0.9;
  q.I_star_prime = 1.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_quasi_resonant(q, model));
  }
}
BENCHMARK(BM_KernelQuasiResonant);

static void BM_PairRateAdaptive(benchmark::State& state) {
  const GasModel model = reference_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_collision_rate({2, 0, 0}, {0, 0, 0}, 1.0, 1.0, model));
  }
}
BENCHMARK(BM_PairRateAdaptive);

static void BM_PairRateFixed32(benchmark::State& state) {
  const GasModel model = reference_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_collision_rate_fixed(1.0, 2.0, model));
  }
}
BENCHMARK(BM_PairRateFixed32);

static void BM_PostCollisionSample(benchmark::State& state) {
  const GasModel model = reference_model();
  Rng rng(2, 0);
  const EnergySplit split{3.0, 1.0, 2.0, 1.0 / 3.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_post_collision_energies(split, model, rng));
  }
}
BENCHMARK(BM_PostCollisionSample);
