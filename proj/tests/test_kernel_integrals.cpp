#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qrgas/errors.hpp"
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

TEST_CASE("pair rate approaches the strip-free limit as eps vanishes") {
  // C_B delta E_k^(kk-1/2) E_i^(ki) E^(g+kk+ki) R0^kk (1-R0)^(ki+delta-1)
  // evaluates to 36 for E_k = 1, E_i = 2 with the canonical parameters.
  const GasModel model = reference_model(1e-4);
  const Vec3 v{2, 0, 0}, v_star{0, 0, 0};
  const double nu = pair_collision_rate(v, v_star, 1.0, 1.0, model);
  CHECK(nu == doctest::Approx(36.0).epsilon(1e-6));
}

TEST_CASE("pair rate is symmetric and positive") {
  const GasModel model = reference_model(0.2);
  Rng rng(31, 0);
  for (int k = 0; k < 50; ++k) {
    const Vec3 v{rng.normal(), rng.normal(), rng.normal()};
    const Vec3 w{rng.normal(), rng.normal(), rng.normal()};
    const double I = rng.exponential(), J = rng.exponential();
    const double a = pair_collision_rate(v, w, I, J, model);
    const double b = pair_collision_rate(w, v, J, I, model);
    CHECK(a > 0.0);
    CHECK(a == b);  // the reduced form depends on the pair only
  }
  CHECK_THROWS_AS(pair_collision_rate({1, 0, 0}, {1, 0, 0}, 1.0, 1.0, model),
                  DegeneratePairError);
  CHECK_THROWS_AS(pair_collision_rate({1, 0, 0}, {0, 0, 0}, 0.0, 0.0, model),
                  DegeneratePairError);
}

TEST_CASE("reduced 1D rate matches the full 2D kernel integral") {
  // nu = 4 pi * iint B_eps phi phi dI' dI'* (the angular factor integrates to
  // one); the right-hand side comes from the 2D Borgnakke-Larsen quadrature
  // used by resonant_limit_pair with psi = 1.
  const GasModel model = reference_model(0.15);
  Rng rng(32, 0);
  auto one = [](double, double) { return 1.0; };
  for (int k = 0; k < 20; ++k) {
    const Vec3 v{rng.normal(), rng.normal(), rng.normal()};
    const Vec3 w{rng.normal(), rng.normal(), rng.normal()};
    const double I = 0.05 + rng.exponential(), J = 0.05 + rng.exponential();
    const auto [j_eps, j_0] =
        resonant_limit_pair(v, w, I, J, {0, 0, 1}, one, model.epsilon, model);
    (void)j_0;
    const double nu = pair_collision_rate(v, w, I, J, model);
    CHECK(4.0 * M_PI * j_eps == doctest::Approx(nu).epsilon(1e-6));
  }
}

TEST_CASE("fixed-rule fast path agrees with adaptive quadrature") {
  for (double eps : {0.05, 0.1, 0.5, 10.0}) {
    const GasModel model = reference_model(eps);
    Rng rng(33, 0);
    for (int k = 0; k < 40; ++k) {
      const double E_k = std::exp(rng.uniform(-6.0, 6.0));
      const double E_i = std::exp(rng.uniform(-6.0, 6.0));
      const Vec3 v{2.0 * std::sqrt(E_k / model.m), 0, 0};
      const double slow = pair_collision_rate(v, Vec3{}, 0.5 * E_i, 0.5 * E_i, model);
      const double fast = pair_collision_rate_fixed(E_k, E_i, model);
      CHECK(fast == doctest::Approx(slow).epsilon(1e-6));
    }
  }
}

TEST_CASE("strip expansion: closed-form cases") {
  // psi = 1 at R0 = 1/2: the expansion coefficient vanishes (eta'' = 0 and
  // psi' = 0) and the integral itself is fourth order.
  auto one = [](double) { return 1.0; };
  auto zero = [](double) { return 0.0; };
  for (double eps : {1e-1, 1e-2}) {
    const auto [lhs, rhs] = taylor_expansion_check(0.5, one, zero, eps);
    CHECK(rhs == 0.0);
    CHECK(std::abs(lhs) < 0.1 * eps * eps * eps);
  }

  // psi(R) = R at R0 = 1/2: rhs = eps^2 * 4 / (3 * 64) = eps^2 / 48.
  auto ident = [](double R) { return R; };
  auto didet = [](double) { return 1.0; };
  {
    const auto [lhs, rhs] = taylor_expansion_check(0.5, ident, didet, 1e-3);
    CHECK(rhs == doctest::Approx(1e-6 / 48.0).epsilon(1e-12));
    CHECK(lhs / rhs == doctest::Approx(1.0).epsilon(1e-2));
  }

  // For C^2 psi the remainder is fourth order: |lhs - rhs| / eps^3 keeps
  // decreasing under eps halving.
  double prev = -1.0;
  for (double eps : {1e-1, 5e-2, 2.5e-2}) {
    const auto [lhs, rhs] = taylor_expansion_check(0.3, ident, didet, eps);
    const double d = std::abs(lhs - rhs) / (eps * eps * eps);
    if (prev > 0.0) CHECK(d < prev / 1.8);
    prev = d;
  }
}

TEST_CASE("resonant limit pair") {
  const GasModel model = reference_model();
  const Vec3 v{1.4, -0.2, 0.3}, w{-0.3, 0.8, 0.1};
  const double I = 0.9, J = 1.4;
  const double E_i = I + J;

  SUBCASE("zero test function gives zero integrals") {
    auto zero2 = [](double, double) { return 0.0; };
    const auto [j_eps, j_0] = resonant_limit_pair(v, w, I, J, {0, 0, 1}, zero2, 0.05, model);
    CHECK(j_eps == 0.0);
    CHECK(j_0 == 0.0);
  }

  auto bump1 = [](double u) {
    const double q = 1.0 - u * u;
    return q > 0.0 ? std::exp(-1.0 / q) : 0.0;
  };
  auto psi = [&](double x, double y) {
    return bump1((x - 0.4 * E_i) / (0.35 * E_i)) * bump1((y - 0.45 * E_i) / (0.4 * E_i));
  };

  SUBCASE("halving eps quarters the discrepancy") {
    const auto [ja, j0a] = resonant_limit_pair(v, w, I, J, {0, 0, 1}, psi, 1e-2, model);
    const auto [jb, j0b] = resonant_limit_pair(v, w, I, J, {0, 0, 1}, psi, 5e-3, model);
    CHECK(j0a == doctest::Approx(j0b).epsilon(1e-9));  // eps-independent limit
    const double ratio = std::abs(ja - j0a) / std::abs(jb - j0b);
    CHECK(ratio > 3.2);
    CHECK(ratio < 4.8);
  }

  SUBCASE("wide strips are far from the resonant limit") {
    const auto [j_eps, j_0] = resonant_limit_pair(v, w, I, J, {0, 0, 1}, psi, 10.0, model);
    CHECK(std::abs(j_eps - j_0) / std::abs(j_0) > 0.05);
  }
}
