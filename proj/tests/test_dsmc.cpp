#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qrgas/analytics.hpp"
#include "qrgas/dsmc.hpp"
#include "qrgas/errors.hpp"
#include "qrgas/kernel_integrals.hpp"
#include "qrgas/quadrature.hpp"
#include "qrgas/special_functions.hpp"

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

InitialCondition two_temp(double T_k, double T_i) {
  InitialCondition init;
  init.kind = InitialCondition::Kind::TwoTempMaxwellian;
  init.rho = 1.0;
  init.T_k = T_k;
  init.T_i = T_i;
  return init;
}

}  // namespace

TEST_CASE("initial sampling hits the target moments") {
  const GasModel model = reference_model();
  const std::size_t n = 100000;

  SUBCASE("two-temperature Maxwellian") {
    Ensemble ens = Ensemble::sample(two_temp(1.0, 50.0), n, model, 2021);
    const Moments mo = ens.moments();
    // <I> = (delta/2) T_i; 3 standard errors of the mean.
    CHECK(std::abs(mo.T_i - 50.0) < 3.0 * 50.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(mo.T_k - 1.0) < 3.0 * std::sqrt(2.0 / (3.0 * n)));
    CHECK(mo.number_density == doctest::Approx(1.0));
  }

  SUBCASE("uniform cube matches the targets in mean") {
    InitialCondition init = two_temp(1.0, 50.0);
    init.kind = InitialCondition::Kind::Uniform;
    Ensemble ens = Ensemble::sample(init, n, model, 2022);
    const Moments mo = ens.moments();
    CHECK(std::abs(mo.T_k - 1.0) < 0.02);
    CHECK(std::abs(mo.T_i - 50.0) < 1.0);
  }

  SUBCASE("anisotropic kind keeps the mean kinetic temperature") {
    InitialCondition init = two_temp(1.0, 50.0);
    init.kind = InitialCondition::Kind::AnisotropicNormalUniform;
    Ensemble ens = Ensemble::sample(init, n, model, 2023);
    const Moments mo = ens.moments();
    CHECK(std::abs(mo.T_k - 1.0) < 0.02);
    // Per-axis spreads should differ by the configured factors.
    double sx = 0.0, sz = 0.0;
    for (const auto& p : ens.particles()) {
      sx += p.v.x * p.v.x;
      sz += p.v.z * p.v.z;
    }
    CHECK(sz / sx == doctest::Approx(3.0).epsilon(0.1));  // factors 0.5 vs 1.5
  }

  SUBCASE("fixed seed reproduces the ensemble bit for bit") {
    Ensemble a = Ensemble::sample(two_temp(1.0, 50.0), 1000, model, 7);
    Ensemble b = Ensemble::sample(two_temp(1.0, 50.0), 1000, model, 7);
    for (std::size_t k = 0; k < 1000; ++k) {
      CHECK(a.particles()[k].v.x == b.particles()[k].v.x);
      CHECK(a.particles()[k].I == b.particles()[k].I);
    }
  }

  CHECK_THROWS_AS(Ensemble::sample(two_temp(1.0, 50.0), 1, model, 1), std::invalid_argument);
  CHECK_THROWS_AS(Ensemble::sample(two_temp(-1.0, 50.0), 10, model, 1), std::domain_error);
}

TEST_CASE("moment estimators") {
  const GasModel model = reference_model();
  std::vector<Particle> same(50, Particle{{1.0, 2.0, 3.0}, 4.0});
  const Moments mo = estimate_moments(same, 1.0 / 50.0, model);
  CHECK(mo.T_k == 0.0);
  CHECK(mo.T_i == doctest::Approx(4.0));  // 2 I0 / delta
  CHECK(mo.u.y == doctest::Approx(2.0));

  // Galilean shift leaves T_k unchanged to rounding.
  Ensemble ens = Ensemble::sample(two_temp(1.0, 5.0), 20000, model, 17);
  const double before = ens.moments().T_k;
  for (auto& p : ens.particles()) p.v += Vec3{100.0, -40.0, 7.0};
  const double after = ens.moments().T_k;
  CHECK(after == doctest::Approx(before).epsilon(1e-10));
}

TEST_CASE("post-collision sampling respects the strip and simplex") {
  const GasModel model = reference_model(0.1);
  Rng rng(404, 0);
  EnergySplit split{3.0, 1.0, 2.0, 1.0 / 3.0};
  const double z0 = std::log(split.E_k / split.E_i);
  for (int k = 0; k < 100000; ++k) {
    const PostCollisionSample s = sample_post_collision_energies(split, model, rng);
    CHECK(s.I_prime >= 0.0);
    CHECK(s.I_star_prime >= 0.0);
    const double E_i_prime = s.I_prime + s.I_star_prime;
    CHECK(E_i_prime <= split.E);
    const double R = 1.0 - E_i_prime / split.E;
    CHECK(std::abs(std::log(R / (1.0 - R)) - z0) <= model.epsilon * (1.0 + 1e-12));
    CHECK(norm2(s.sigma) == doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(sample_post_collision_energies(EnergySplit{1.0, 1.0, 0.0, 1.0}, model, rng),
                  DegeneratePairError);
}

TEST_CASE("post-collision fraction r is uniform for delta = 2") {
  const GasModel model = reference_model(0.1);
  Rng rng(405, 0);
  EnergySplit split{3.0, 1.0, 2.0, 1.0 / 3.0};
  const std::size_t n = 1000000;
  std::vector<double> rs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const PostCollisionSample s = sample_post_collision_energies(split, model, rng);
    rs[k] = s.I_prime / (s.I_prime + s.I_star_prime);
  }
  std::sort(rs.begin(), rs.end());
  double d_stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cdf = rs[i];
    d_stat = std::max({d_stat, (i + 1.0) / n - cdf, cdf - static_cast<double>(i) / n});
  }
  const double p = kolmogorov_sf(std::sqrt(static_cast<double>(n)) * d_stat);
  CHECK(p > 0.01);
}

TEST_CASE("post-collision kinetic fraction follows the strip density") {
  const GasModel model = reference_model(0.1);
  Rng rng(406, 0);
  EnergySplit split{3.0, 1.0, 2.0, 1.0 / 3.0};
  const double z0 = std::log(split.E_k / split.E_i);
  const double z_lo = z0 - model.epsilon, z_hi = z0 + model.epsilon;

  constexpr std::size_t kBins = 50;
  constexpr std::size_t kDraws = 1000000;
  std::vector<double> counts(kBins, 0.0);
  for (std::size_t k = 0; k < kDraws; ++k) {
    const PostCollisionSample s = sample_post_collision_energies(split, model, rng);
    const double R = 1.0 - (s.I_prime + s.I_star_prime) / split.E;
    const double z = std::log(R / (1.0 - R));
    const auto bin = static_cast<std::size_t>((z - z_lo) / (z_hi - z_lo) * kBins);
    counts[std::min(bin, kBins - 1)] += 1.0;
  }

  // Expected bin masses: the folded target R^(kk+1/2) (1-R)^(ki+delta-1/2)
  // in z, normalized over the strip.
  auto target = [&](double z) {
    const double R = 1.0 / (1.0 + std::exp(-z));
    return std::pow(R, model.kappa_k + 0.5) *
           std::pow(1.0 - R, model.kappa_i + model.delta - 0.5);
  };
  const double norm = adaptive_integrate(target, z_lo, z_hi, 1e-12, 1e-16).value;
  double sup_rel_err = 0.0;
  for (std::size_t b = 0; b < kBins; ++b) {
    const double a = z_lo + (z_hi - z_lo) * static_cast<double>(b) / kBins;
    const double c = z_lo + (z_hi - z_lo) * static_cast<double>(b + 1) / kBins;
    const double expected = adaptive_integrate(target, a, c, 1e-12, 1e-16).value / norm * kDraws;
    sup_rel_err = std::max(sup_rel_err, std::abs(counts[b] - expected) / expected);
  }
  CHECK(sup_rel_err < 0.03);
}

TEST_CASE("identical particles never collide") {
  const GasModel model = reference_model();
  InitialCondition init = two_temp(1.0, 1.0);
  Ensemble ens = Ensemble::sample(init, 64, model, 5);
  for (auto& p : ens.particles()) {
    p.v = {0.3, -0.2, 0.1};
    p.I = 2.0;  // E_k = 0 for every pair
  }
  Simulator sim(std::move(ens), {});
  const std::size_t collisions = sim.step(1e-3);
  CHECK(collisions == 0);
  for (const auto& p : sim.ensemble().particles()) {
    CHECK(p.v.x == 0.3);
    CHECK(p.I == 2.0);
  }
}

TEST_CASE("collision stepping conserves the ensemble invariants") {
  const GasModel model = reference_model(0.1);
  const std::size_t n = 400;
  Ensemble ens = Ensemble::sample(two_temp(1.0, 10.0), n, model, 99);

  Vec3 p0{};
  double e0 = 0.0;
  for (const auto& p : ens.particles()) {
    p0 += model.m * p.v;
    e0 += 0.5 * model.m * norm2(p.v) + p.I;
  }

  DsmcOptions opt;
  opt.check_conservation = true;
  Simulator sim(std::move(ens), opt);
  std::size_t total = 0;
  for (int k = 0; k < 10000; ++k) total += sim.step(1e-6);
  CHECK(total > 1000);  // the run actually collided

  Vec3 p1{};
  double e1 = 0.0;
  for (const auto& p : sim.ensemble().particles()) {
    p1 += model.m * p.v;
    e1 += 0.5 * model.m * norm2(p.v) + p.I;
  }
  CHECK(std::abs(p1.x - p0.x) / n < 1e-10);
  CHECK(std::abs(p1.y - p0.y) / n < 1e-10);
  CHECK(std::abs(p1.z - p0.z) / n < 1e-10);
  CHECK(std::abs(e1 - e0) < 1e-9 * e0);

  const CollisionStats& stats = sim.stats();
  CHECK(stats.conservation_violations == 0);
  CHECK(stats.support_violations == 0);
  CHECK(stats.max_momentum_error < 1e-12);
  CHECK(stats.max_energy_error < 1e-12);
}

TEST_CASE("sequential runs are reproducible") {
  SimulationConfig cfg;
  cfg.model = reference_model(0.1);
  cfg.initial = two_temp(1.0, 50.0);
  cfg.particles = 2000;
  cfg.t_end = 2e-5;
  cfg.output_points = 9;
  cfg.seed = 31415;
  const TemperatureSeries a = run_simulation(cfg);
  const TemperatureSeries b = run_simulation(cfg);
  for (std::size_t k = 0; k < a.times.size(); ++k) {
    CHECK(a.T_i[k] == b.T_i[k]);
    CHECK(a.T_k[k] == b.T_k[k]);
  }
  CHECK(a.T_i.front() == doctest::Approx(50.0).epsilon(0.1));
}

TEST_CASE("equilibrium start stays at equilibrium") {
  SimulationConfig cfg;
  cfg.model = reference_model(0.1);
  cfg.initial = two_temp(20.6, 20.6);
  cfg.particles = 20000;
  cfg.t_end = 2e-4;
  cfg.output_points = 10;
  cfg.seed = 2718;
  CollisionStats stats;
  const TemperatureSeries series = run_simulation(cfg, {}, &stats);
  const double n = static_cast<double>(cfg.particles);
  const double se_tk = 20.6 * std::sqrt(2.0 / (3.0 * n));
  const double se_ti = 20.6 / std::sqrt(n);
  double mean_tk = 0.0, mean_ti = 0.0;
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    mean_tk += series.T_k[k];
    mean_ti += series.T_i[k];
  }
  mean_tk /= static_cast<double>(series.times.size());
  mean_ti /= static_cast<double>(series.times.size());
  CHECK(std::abs(mean_tk - series.T_eq) < 3.0 * se_tk);
  CHECK(std::abs(mean_ti - series.T_eq) < 3.0 * se_ti);

  // Detailed balance: accepted collisions are strip-symmetric at equilibrium.
  const double pos = static_cast<double>(stats.delta_eta_pos);
  const double neg = static_cast<double>(stats.delta_eta_neg);
  const double total = pos + neg;
  CHECK(total > 10000);
  const double z = (pos - neg) / std::sqrt(total);
  CHECK(std::abs(z) < 2.58);  // sign test at the 1% level
}
