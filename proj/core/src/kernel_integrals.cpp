#include "qrgas/kernel_integrals.hpp"

#include <cmath>

#include "qrgas/errors.hpp"
#include "qrgas/kinematics.hpp"
#include "qrgas/special_functions.hpp"

namespace qrgas {

namespace {

// log R and log(1-R) for R = eta_inv(z), stable for |z| large.
inline double log_logistic(double z) { return z < 0.0 ? z - std::log1p(std::exp(z)) : -std::log1p(std::exp(-z)); }
inline double log_one_minus_logistic(double z) { return log_logistic(-z); }

// Integrand of the reduced strip integral in the z variable:
//   R^(kappa_k + 1/2) (1-R)^(kappa_i + delta - 1/2),  R = eta_inv(z).
// The +1/2 shifts come from dR = R(1-R) dz and sqrt(eta'(R)) in chi_eps.
inline double strip_integrand(double z, double a_exp, double b_exp) {
  return std::exp(a_exp * log_logistic(z) + b_exp * log_one_minus_logistic(z));
}

}  // namespace

double pair_collision_rate(const Vec3& v, const Vec3& v_star, double I, double I_star,
                           const GasModel& model, const QuadratureOptions& opt) {
  const double E_k = 0.25 * model.m * norm2(v - v_star);
  const double E_i = I + I_star;
  const double E = E_k + E_i;
  if (!(E > 0.0) || !(E_k > 0.0) || !(E_i > 0.0))
    throw DegeneratePairError("pair_collision_rate: requires E_k > 0 and E_i > 0");
  const double z0 = std::log(E_k / E_i);
  const double a_exp = model.kappa_k + 0.5;
  const double b_exp = model.kappa_i + model.delta - 0.5;
  const double strip =
      adaptive_integrate([&](double z) { return strip_integrand(z, a_exp, b_exp); },
                         z0 - model.epsilon, z0 + model.epsilon, opt)
          .value;
  // sqrt(eta'(R0)) = E / sqrt(E_k E_i).
  const double s = strip * E / std::sqrt(E_k * E_i) / (2.0 * model.epsilon);
  return model.C_B * model.delta * std::pow(E_k, model.kappa_k - 0.5) *
         std::pow(E_i, model.kappa_i) *
         std::pow(E, model.gamma + model.kappa_k + model.kappa_i) * s;
}

double pair_collision_rate_fixed(double E_k, double E_i, const GasModel& model,
                                 std::size_t nodes) {
  if (!(E_k > 0.0) || !(E_i > 0.0))
    throw DegeneratePairError("pair_collision_rate_fixed: requires E_k > 0 and E_i > 0");
  const double E = E_k + E_i;
  const double z0 = std::log(E_k / E_i);
  const double a_exp = model.kappa_k + 0.5;
  const double b_exp = model.kappa_i + model.delta - 0.5;
  const GaussRule& rule = gauss_legendre(nodes);
  double strip = 0.0;
  // For wide strips split into panels of at most 2 z-units so the fixed rule
  // keeps its accuracy.
  const int panels = std::max(1, static_cast<int>(std::ceil(model.epsilon)));
  const double width = 2.0 * model.epsilon / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = z0 - model.epsilon + p * width;
    const double c = a + 0.5 * width, h = 0.5 * width;
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes; ++i)
      sum += rule.weights[i] * strip_integrand(c + h * rule.nodes[i], a_exp, b_exp);
    strip += sum * h;
  }
  const double s = strip * E / std::sqrt(E_k * E_i) / (2.0 * model.epsilon);
  return model.C_B * model.delta * std::pow(E_k, model.kappa_k - 0.5) *
         std::pow(E_i, model.kappa_i) *
         std::pow(E, model.gamma + model.kappa_k + model.kappa_i) * s;
}

std::pair<double, double> taylor_expansion_check(double R0,
                                                 const std::function<double(double)>& psi,
                                                 const std::function<double(double)>& psi_prime,
                                                 double eps, const QuadratureOptions& opt) {
  if (!(R0 > 0.0 && R0 < 1.0))
    throw std::domain_error("taylor_expansion_check: R0 must lie in (0,1)");
  const double z0 = eta(R0);
  const double sq_eta0 = std::sqrt(eta_prime(R0));
  // lhs in the z variable: chi_eps dR = sqrt(eta'(R) eta'(R0)) / (2 eps)
  //   * R (1 - R) dz = sqrt(eta'(R0)) sqrt(R (1-R)) / (2 eps) dz.
  auto integrand = [&](double z) {
    const double R = eta_inv(z);
    return (R - R0) * psi(R) * std::sqrt(R * (1.0 - R));
  };
  const double lhs =
      adaptive_integrate(integrand, z0 - eps, z0 + eps, opt).value * sq_eta0 / (2.0 * eps);
  const double ep = eta_prime(R0);
  const double rhs =
      eps * eps / (3.0 * ep * ep * ep) * (ep * psi_prime(R0) - eta_second(R0) * psi(R0));
  return {lhs, rhs};
}

std::pair<double, double> resonant_limit_pair(const Vec3& v, const Vec3& v_star, double I,
                                              double I_star, const Vec3& sigma,
                                              const std::function<double(double, double)>& psi,
                                              double eps, const GasModel& model,
                                              const QuadratureOptions& opt) {
  const EnergySplit split = energy_decomposition(v, v_star, I, I_star, model);
  if (!(split.E_k > 0.0) || !(split.E_i > 0.0))
    throw DegeneratePairError("resonant_limit_pair: requires E_k > 0 and E_i > 0");
  const double E = split.E;
  const double R_pre = split.R;
  const double z_pre = eta(R_pre);
  const double sq_eta_pre = std::sqrt(eta_prime(R_pre));

  // J_eps over the Borgnakke-Larsen coordinates (z = eta(R), r):
  //   I' = r (1-R) E, I'* = (1-r)(1-R) E, Jacobian (1-R) E^2 dR dr,
  //   dR = R (1-R) dz, chi_eps = sqrt(eta'(R)) sqrt(eta'(R_pre)) / (2 eps).
  auto outer = [&](double z) {
    const double R = eta_inv(z);
    const double E_i_prime = (1.0 - R) * E;
    CollisionQuadruple q{v, v_star, I, I_star, 0.0, 0.0, sigma};
    auto inner = [&](double r) {
      q.I_prime = r * E_i_prime;
      q.I_star_prime = E_i_prime - q.I_prime;
      const double phi_phi = std::pow(q.I_prime * q.I_star_prime, 0.5 * model.delta - 1.0);
      return kernel_reference(q, model) * psi(q.I_prime, q.I_star_prime) * phi_phi;
    };
    const double inner_val = adaptive_integrate(inner, 0.0, 1.0, opt).value;
    // sqrt(eta'(R)) * R(1-R) = sqrt(R(1-R)).
    return inner_val * (1.0 - R) * E * E * std::sqrt(R * (1.0 - R));
  };
  const double j_eps =
      adaptive_integrate(outer, z_pre - eps, z_pre + eps, opt).value * sq_eta_pre / (2.0 * eps);

  const double E_i = split.E_i;
  auto res_integrand = [&](double I_prime) {
    const double I_partner = E_i - I_prime;
    const double phi_phi = std::pow(I_prime * I_partner, 0.5 * model.delta - 1.0);
    return kernel_resonant(v, v_star, I, I_star, I_prime, sigma, model) *
           psi(I_prime, I_partner) * phi_phi;
  };
  const double j_0 = adaptive_integrate(res_integrand, 0.0, E_i, opt).value;
  return {j_eps, j_0};
}

}  // namespace qrgas
