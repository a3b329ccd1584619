#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qrgas/errors.hpp"
#include "qrgas/kinematics.hpp"
#include "qrgas/quadrature.hpp"
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

TEST_CASE("energy decomposition") {
  const GasModel model = reference_model();
  const EnergySplit s = energy_decomposition({2, 0, 0}, {0, 0, 0}, 1.0, 1.0, model);
  CHECK(s.E_k == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.E_i == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s.E == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(s.R == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  CHECK_THROWS_AS(energy_decomposition({1, 1, 1}, {1, 1, 1}, 0.0, 0.0, model),
                  DegeneratePairError);

  const EnergySplit pure = energy_decomposition({0, 0, 0}, {0, 0, 0}, 2.0, 3.0, model);
  CHECK(pure.E_k == 0.0);
  CHECK(pure.E_i == 5.0);
  CHECK(pure.R == 0.0);

  CHECK_THROWS_AS(energy_decomposition({1, 0, 0}, {0, 0, 0}, -1.0, 0.0, model), std::domain_error);
}

TEST_CASE("post-collision velocities") {
  // Zero post-collision relative speed.
  const auto [va, vb] = post_collision_velocities({1, 2, 3}, {3, 2, 1}, 4.0, 4.0, {0, 0, 1}, 1.0);
  CHECK(va.x == doctest::Approx(2.0));
  CHECK(norm(va - vb) == doctest::Approx(0.0));

  // Elastic configuration reproduces the incoming pair.
  const auto [v1, v2] = post_collision_velocities({2, 0, 0}, {0, 0, 0}, 1.0, 0.0, {1, 0, 0}, 1.0);
  CHECK(v1.x == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(norm(v2) == doctest::Approx(0.0));

  CHECK_THROWS_AS(post_collision_velocities({1, 0, 0}, {0, 0, 0}, 1.0, 2.0, {1, 0, 0}, 1.0),
                  UnphysicalSplitError);
}

TEST_CASE("conservation across random collision states") {
  const double m = 1.7;
  Rng rng(2024, 0);
  for (int k = 0; k < 10000; ++k) {
    const Vec3 v{rng.normal(), rng.normal(), rng.normal()};
    const Vec3 v_star{rng.normal(), rng.normal(), rng.normal()};
    const double I = rng.exponential();
    const double I_star = rng.exponential();
    const double E = 0.25 * m * norm2(v - v_star) + I + I_star;
    const double E_i_prime = E * rng.uniform();
    const Vec3 sigma = rng.unit_vector();
    const auto [v1, v2] = post_collision_velocities(v, v_star, E, E_i_prime, sigma, m);

    // Momentum: computed as G +/- offset, so the sums cancel to rounding.
    const Vec3 dp = (v1 + v2) - (v + v_star);
    CHECK(std::abs(dp.x) <= 1e-14 * (1.0 + std::abs(v.x + v_star.x)));
    CHECK(std::abs(dp.y) <= 1e-14 * (1.0 + std::abs(v.y + v_star.y)));
    CHECK(std::abs(dp.z) <= 1e-14 * (1.0 + std::abs(v.z + v_star.z)));

    // Total energy within 1e-12 relative.
    const double e_pre = 0.5 * m * (norm2(v) + norm2(v_star)) + I + I_star;
    const double e_post = 0.5 * m * (norm2(v1) + norm2(v2)) + E_i_prime;
    CHECK(std::abs(e_post - e_pre) <= 1e-12 * e_pre);

    // (m/4)|v1 - v2|^2 reproduces the kinetic part of the split.
    CHECK(0.25 * m * norm2(v1 - v2) == doctest::Approx(E - E_i_prime).epsilon(1e-12));
  }
}

TEST_CASE("logit map") {
  CHECK(eta(0.5) == doctest::Approx(0.0));
  CHECK(eta_prime(0.5) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(eta_inv(eta(0.3)) == doctest::Approx(0.3).epsilon(1e-14));
  for (double r = 0.05; r < 1.0; r += 0.1) {
    CHECK(eta(r) + eta(1.0 - r) == doctest::Approx(0.0).epsilon(1e-14));
    // eta''(R) closed form against finite differences.
    const double h = 1e-6;
    const double fd = (eta_prime(r + h) - eta_prime(r - h)) / (2.0 * h);
    CHECK(eta_second(r) == doctest::Approx(fd).epsilon(1e-6));
  }
  CHECK_THROWS_AS(eta(0.0), std::domain_error);
  CHECK_THROWS_AS(eta(1.0), std::domain_error);
  CHECK_THROWS_AS(eta_prime(-0.2), std::domain_error);
}

TEST_CASE("strip cutoff") {
  // Diagonal condition with eta'(1/2) = 4.
  CHECK(chi_epsilon(0.5, 0.5, 0.1) == doctest::Approx(20.0).epsilon(1e-14));
  // |eta(0.9) - eta(0.1)| = 2 log 9 far exceeds 0.1.
  CHECK(chi_epsilon(0.9, 0.1, 0.1) == 0.0);

  Rng rng(7, 0);
  for (int k = 0; k < 200; ++k) {
    const double r1 = rng.uniform(0.02, 0.98);
    const double r2 = rng.uniform(0.02, 0.98);
    CHECK(chi_epsilon(r1, r2, 0.3) == chi_epsilon(r2, r1, 0.3));
  }
  for (double r = 0.05; r < 1.0; r += 0.05)
    CHECK(chi_epsilon(r, r, 0.25) ==
          doctest::Approx(eta_prime(r) / 0.5).epsilon(1e-14));
  CHECK_THROWS_AS(chi_epsilon(0.5, 0.5, 0.0), std::domain_error);
}

TEST_CASE("internal-energy simplex normalization") {
  const auto [m2, d2] = m_phi_pair(2.0, 2.0);
  CHECK(m2 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(d2 == doctest::Approx(2.0).epsilon(1e-14));
  const auto zero = m_phi_pair(0.0, 2.0);
  CHECK(zero.first == 0.0);
  CHECK(zero.second == 0.0);
  CHECK(m_phi_pair(1.0, 4.0).first == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
  CHECK_THROWS_AS(m_phi_pair(1.0, 1.5), std::domain_error);

  // Oracle: direct iterated quadrature of the simplex integral and the
  // convolution form of its derivative.
  for (double delta : {2.0, 3.0, 4.0}) {
    for (double E : {0.5, 1.0, 5.0}) {
      auto inner = [delta](double lo, double hi, double power) {
        return adaptive_integrate([power](double y) { return std::pow(y, power); }, lo, hi,
                                  1e-12, 1e-16)
            .value;
      };
      const double p = 0.5 * delta - 1.0;
      const double m_quad =
          adaptive_integrate(
              [&](double x) { return std::pow(x, p) * inner(0.0, E - x, p); }, 0.0, E, 1e-11,
              1e-16)
              .value;
      const double mprime_quad =
          adaptive_integrate(
              [&](double x) { return std::pow(x, p) * std::pow(E - x, p); }, 0.0, E, 1e-11, 1e-16)
              .value;
      const auto [m_cf, mprime_cf] = m_phi_pair(E, delta);
      CHECK(m_cf == doctest::Approx(m_quad).epsilon(1e-8));
      CHECK(mprime_cf == doctest::Approx(mprime_quad).epsilon(1e-8));
    }
  }
}

TEST_CASE("reference kernel") {
  const GasModel model = reference_model();
  CollisionQuadruple q;
  q.v = {2, 0, 0};
  q.v_star = {0, 0, 0};
  q.I = 1.0;
  q.I_star = 1.0;  // E_k = 1, E_i = 2, E = 3

  SUBCASE("outside the physical support") {
    q.I_prime = 3.0;
    q.I_star_prime = 1.0;  // E_i' = 4 > E
    CHECK(kernel_reference(q, model) == 0.0);
  }

  SUBCASE("value at the canonical configuration") {
    q.I_prime = 1.0;
    q.I_star_prime = 1.0;  // E_i' = 2, E_k' = 1
    // C_B b E_k^0 E_k'^(1/2) E_i^(-1/2) E_i'^(-1/2) E^3 / m_phi(3)
    //   = 2 (1/4pi) (1/2) 27 / (9/2) = 3 / (2 pi).
    CHECK(kernel_reference(q, model) == doctest::Approx(3.0 / (2.0 * M_PI)).epsilon(1e-13));
  }

  SUBCASE("pair-exchange symmetry") {
    Rng rng(99, 0);
    for (int k = 0; k < 1000; ++k) {
      CollisionQuadruple a;
      a.v = {rng.normal(), rng.normal(), rng.normal()};
      a.v_star = {rng.normal(), rng.normal(), rng.normal()};
      a.I = rng.exponential();
      a.I_star = rng.exponential();
      const double E = 0.25 * norm2(a.v - a.v_star) + a.I + a.I_star;
      const double E_i_prime = 0.9 * E * rng.uniform();
      const double r = rng.uniform();
      a.I_prime = r * E_i_prime;
      a.I_star_prime = E_i_prime - r * E_i_prime;
      a.sigma = rng.unit_vector();
      CollisionQuadruple b{a.v_star, a.v, a.I_star, a.I, a.I_star_prime, a.I_prime, -a.sigma};
      CHECK(kernel_reference(a, model) ==
            doctest::Approx(kernel_reference(b, model)).epsilon(1e-12));
    }
  }

  SUBCASE("singular configurations are rejected") {
    CollisionQuadruple s;
    s.v = {1, 0, 0};
    s.v_star = {0, 0, 0};
    s.I = 0.0;
    s.I_star = 0.0;  // E_i = 0 with kappa_i < 0
    s.I_prime = 0.1;
    s.I_star_prime = 0.05;
    CHECK_THROWS_AS(kernel_reference(s, model), SingularConfigurationError);

    GasModel soft = model;
    soft.kappa_k = 0.2;  // E_k = 0 with kappa_k < 1/2
    CollisionQuadruple t;
    t.v = {1, 1, 1};
    t.v_star = {1, 1, 1};
    t.I = 1.0;
    t.I_star = 1.0;
    t.I_prime = 0.5;
    t.I_star_prime = 0.5;
    CHECK_THROWS_AS(kernel_reference(t, soft), SingularConfigurationError);
  }
}

TEST_CASE("quasi-resonant kernel") {
  const GasModel model = reference_model();
  CollisionQuadruple q;
  q.v = {2, 0, 0};
  q.v_star = {0, 0, 0};
  q.I = 1.0;
  q.I_star = 1.0;

  SUBCASE("resonant configuration hits the diagonal of the cutoff") {
    q.I_prime = 0.7;
    q.I_star_prime = 1.3;  // E_i' = E_i = 2
    const double R = 1.0 - 2.0 / 3.0;
    CHECK(kernel_quasi_resonant(q, model) ==
          doctest::Approx(kernel_reference(q, model) * eta_prime(R) / (2.0 * model.epsilon))
              .epsilon(1e-13));
  }

  SUBCASE("outside the strip") {
    q.I_prime = 0.02;
    q.I_star_prime = 0.03;  // E_i' = 0.05: far from resonance at eps = 0.1
    CHECK(kernel_quasi_resonant(q, model) == 0.0);
  }

  SUBCASE("micro-reversibility") {
    Rng rng(1234, 0);
    int checked = 0;
    while (checked < 10000) {
      CollisionQuadruple a;
      a.v = {rng.normal(), rng.normal(), rng.normal()};
      a.v_star = {rng.normal(), rng.normal(), rng.normal()};
      a.I = rng.exponential();
      a.I_star = rng.exponential();
      const double E = 0.25 * norm2(a.v - a.v_star) + a.I + a.I_star;
      // Post energies near resonance so the strip factor is active.
      const double R_pre = 1.0 - (a.I + a.I_star) / E;
      if (!(R_pre > 1e-6 && R_pre < 1.0 - 1e-6)) continue;
      const double z = eta(R_pre) + rng.uniform(-0.09, 0.09);
      const double E_i_prime = (1.0 - eta_inv(z)) * E;
      const double r = rng.uniform();
      a.I_prime = r * E_i_prime;
      a.I_star_prime = E_i_prime - a.I_prime;
      a.sigma = rng.unit_vector();

      const double fwd = kernel_quasi_resonant(a, model);
      if (fwd == 0.0) continue;
      const auto [v1, v2] =
          post_collision_velocities(a.v, a.v_star, E, E_i_prime, a.sigma, model.m);
      const Vec3 g = a.v - a.v_star;
      const Vec3 sigma_rev = (1.0 / norm(g)) * g;
      CollisionQuadruple rev{v1, v2, a.I_prime, a.I_star_prime, a.I, a.I_star, sigma_rev};
      const double bwd = kernel_quasi_resonant(rev, model);
      CHECK(norm(g) * fwd == doctest::Approx(norm(v1 - v2) * bwd).epsilon(1e-10));
      ++checked;
    }
  }
}

TEST_CASE("resonant kernel") {
  const GasModel model = reference_model();
  const Vec3 v{2, 0, 0}, v_star{0, 0, 0};
  const Vec3 sigma{0, 0, 1};

  // Indicator: I' beyond the internal budget.
  CHECK(kernel_resonant(v, v_star, 1.0, 1.0, 2.5, sigma, model) == 0.0);

  // Identity configuration keeps the pre-collision energies.
  CollisionQuadruple q{v, v_star, 1.0, 1.0, 1.0, 1.0, sigma};
  CHECK(kernel_resonant(v, v_star, 1.0, 1.0, 1.0, sigma, model) ==
        doctest::Approx(kernel_reference(q, model) * 3.0).epsilon(1e-13));

  // Symmetry under (I, I*, I') -> (I*, I, I + I* - I') with sigma -> -sigma.
  Rng rng(55, 0);
  for (int k = 0; k < 1000; ++k) {
    const Vec3 a{rng.normal(), rng.normal(), rng.normal()};
    const Vec3 b{rng.normal(), rng.normal(), rng.normal()};
    const double I = rng.exponential(), I_star = rng.exponential();
    const double I_prime = (I + I_star) * rng.uniform();
    const Vec3 s = rng.unit_vector();
    const double lhs = kernel_resonant(a, b, I, I_star, I_prime, s, model);
    const double rhs = kernel_resonant(a, b, I_star, I, I + I_star - I_prime, -s, model);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}
