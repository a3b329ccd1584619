// End-to-end stepping cost of the collision engine at the canonical
// parameters (throughput is dominated by candidate evaluation).

#include <benchmark/benchmark.h>

#include "qrgas/dsmc.hpp"

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

static void BM_DsmcStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  InitialCondition init;
  init.kind = InitialCondition::Kind::TwoTempMaxwellian;
  init.rho = 1.0;
  init.T_k = 1.0;
  init.T_i = 50.0;
  Ensemble ens = Ensemble::sample(init, n, reference_model(), 1);
  Simulator sim(std::move(ens), {});
  const double dt = 0.1 / sim.collision_rate_estimate();
  std::size_t collisions = 0;
  for (auto _ : state) collisions += sim.step(dt);
  state.counters["collisions/s"] =
      benchmark::Counter(static_cast<double>(collisions), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_DsmcStep)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
