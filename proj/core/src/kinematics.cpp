#include "qrgas/kinematics.hpp"

#include <cmath>
#include <stdexcept>

#include "qrgas/errors.hpp"
#include "qrgas/special_functions.hpp"

namespace qrgas {

EnergySplit energy_decomposition(const Vec3& v, const Vec3& v_star, double I, double I_star,
                                 const GasModel& model) {
  if (I < 0.0 || I_star < 0.0)
    throw std::domain_error("energy_decomposition: internal energies must be >= 0");
  EnergySplit s;
  s.E_k = 0.25 * model.m * norm2(v - v_star);
  s.E_i = I + I_star;
  s.E = s.E_k + s.E_i;
  if (s.E <= 0.0)
    throw DegeneratePairError("energy_decomposition: zero total center-of-mass energy");
  s.R = s.E_k / s.E;
  return s;
}

std::pair<Vec3, Vec3> post_collision_velocities(const Vec3& v, const Vec3& v_star, double E,
                                                double E_i_prime, const Vec3& sigma, double m) {
  if (E_i_prime < 0.0)
    throw std::domain_error("post_collision_velocities: E_i_prime must be >= 0");
  if (E_i_prime > E)
    throw UnphysicalSplitError("post_collision_velocities: E_i_prime exceeds total energy");
  const Vec3 g = 0.5 * (v + v_star);
  const Vec3 offset = std::sqrt((E - E_i_prime) / m) * sigma;
  return {g + offset, g - offset};
}

double eta(double R) {
  if (!(R > 0.0 && R < 1.0)) throw std::domain_error("eta: R must lie in (0,1)");
  return std::log(R / (1.0 - R));
}

double eta_prime(double R) {
  if (!(R > 0.0 && R < 1.0)) throw std::domain_error("eta_prime: R must lie in (0,1)");
  return 1.0 / (R * (1.0 - R));
}

double eta_second(double R) {
  if (!(R > 0.0 && R < 1.0)) throw std::domain_error("eta_second: R must lie in (0,1)");
  const double d = R * (1.0 - R);
  return (2.0 * R - 1.0) / (d * d);
}

double eta_inv(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double chi_epsilon(double R, double R_prime, double eps) {
  if (!(R > 0.0 && R < 1.0) || !(R_prime > 0.0 && R_prime < 1.0))
    throw std::domain_error("chi_epsilon: fractions must lie in (0,1)");
  if (!(eps > 0.0)) throw std::domain_error("chi_epsilon: eps must be > 0");
  if (std::abs(eta(R) - eta(R_prime)) > eps) return 0.0;
  return std::sqrt(eta_prime(R) * eta_prime(R_prime)) / (2.0 * eps);
}

std::pair<double, double> m_phi_pair(double E, double delta) {
  if (!(delta >= 2.0)) throw std::domain_error("m_phi_pair: delta must be >= 2");
  if (E < 0.0) throw std::domain_error("m_phi_pair: E must be >= 0");
  if (E == 0.0) return {0.0, 0.0};
  const double g2 = gamma_fn(0.5 * delta);
  const double common = g2 * g2;
  return {common / gamma_fn(delta + 1.0) * std::pow(E, delta),
          common / gamma_fn(delta) * std::pow(E, delta - 1.0)};
}

namespace {

constexpr double kInvFourPi = 1.0 / (4.0 * M_PI);

double kernel_core(double E_k, double E_i, double E_i_prime, double E, const GasModel& model) {
  if (E_i_prime > E) return 0.0;  // outside the physical support
  if (E_k == 0.0 && model.kappa_k < 0.5)
    throw SingularConfigurationError("kernel: E_k = 0 with kappa_k < 1/2");
  if ((E_i == 0.0 || E_i_prime == 0.0) && model.kappa_i < 0.0)
    throw SingularConfigurationError("kernel: zero internal energy with kappa_i < 0");
  const double E_k_prime = E - E_i_prime;
  const double m_phi = m_phi_pair(E, model.delta).first;
  return model.C_B * kInvFourPi * std::pow(E_k, model.kappa_k - 0.5) *
         std::pow(E_k_prime, model.kappa_k) * std::pow(E_i, model.kappa_i) *
         std::pow(E_i_prime, model.kappa_i) * std::pow(E, model.gamma) / m_phi;
}

}  // namespace

double kernel_reference(const CollisionQuadruple& q, const GasModel& model) {
  const double E_k = 0.25 * model.m * norm2(q.v - q.v_star);
  const double E_i = q.I + q.I_star;
  const double E = E_k + E_i;
  const double E_i_prime = q.I_prime + q.I_star_prime;
  return kernel_core(E_k, E_i, E_i_prime, E, model);
}

double kernel_quasi_resonant(const CollisionQuadruple& q, const GasModel& model) {
  const double E_k = 0.25 * model.m * norm2(q.v - q.v_star);
  const double E_i = q.I + q.I_star;
  const double E = E_k + E_i;
  const double E_i_prime = q.I_prime + q.I_star_prime;
  if (E_i_prime > E) return 0.0;
  const double ref = kernel_core(E_k, E_i, E_i_prime, E, model);
  if (ref == 0.0) return 0.0;
  const double R = 1.0 - E_i_prime / E;        // post-collision kinetic fraction
  const double R_prime = 1.0 - E_i / E;        // pre-collision kinetic fraction
  if (!(R > 0.0 && R < 1.0) || !(R_prime > 0.0 && R_prime < 1.0)) return 0.0;
  return ref * chi_epsilon(R, R_prime, model.epsilon);
}

double kernel_resonant(const Vec3& v, const Vec3& v_star, double I, double I_star, double I_prime,
                       const Vec3& sigma, const GasModel& model) {
  if (I_prime > I + I_star) return 0.0;
  CollisionQuadruple q{v, v_star, I, I_star, I_prime, I + I_star - I_prime, sigma};
  const double E = 0.25 * model.m * norm2(v - v_star) + I + I_star;
  return kernel_reference(q, model) * E;
}

}  // namespace qrgas
