#include "qrgas/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "qrgas/special_functions.hpp"

namespace qrgas {

std::pair<double, double> partition_and_dof(double T, double delta) {
  if (!(T > 0.0)) throw std::domain_error("partition_and_dof: T must be > 0");
  if (!(delta >= 2.0)) throw std::domain_error("partition_and_dof: delta must be >= 2");
  return {gamma_fn(0.5 * delta) * std::pow(T, 0.5 * delta), delta};
}

double maxwellian(const MaxwellianParams& p, const Vec3& v, double I, const GasModel& model) {
  const double z = partition_and_dof(p.T, model.delta).first;
  const double pref = (p.rho / model.m) * std::pow(2.0 * M_PI * p.T / model.m, -1.5) / z;
  return pref * std::exp(-0.5 * model.m * norm2(v - p.u) / p.T - I / p.T);
}

double maxwellian(const TwoTempMaxwellian& p, const Vec3& v, double I, const GasModel& model) {
  const double z = partition_and_dof(p.T_i, model.delta).first;
  const double pref = (p.rho / model.m) * std::pow(2.0 * M_PI * p.T_k / model.m, -1.5) / z;
  return pref * std::exp(-0.5 * model.m * norm2(v - p.u) / p.T_k - I / p.T_i);
}

double kinetic_moment(double beta, double T) {
  if (!(beta > -1.5)) throw std::domain_error("kinetic_moment: requires beta > -3/2");
  return gamma_fn(beta + 1.5) / gamma_fn(1.5) * std::pow(T, beta);
}

double internal_moment(double beta, double T, double delta) {
  if (!(beta > -delta)) throw std::domain_error("internal_moment: requires beta > -delta");
  return gamma_fn(beta + delta) / gamma_fn(delta) * std::pow(T, beta);
}

double lt_coefficient(const GasModel& model) {
  const double a = 2.0 * model.kappa_k + 3.0;
  const double b = 2.0 * model.kappa_i + 2.0 * model.delta + 1.0;
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("lt_coefficient: Gamma argument must be positive");
  return model.C_B / 12.0 * gamma_fn(a) * gamma_fn(b) / (gamma_fn(1.5) * gamma_fn(model.delta));
}

double lt_rhs(double T_k, double T_i, double rho, const GasModel& model) {
  if (!(T_k > 0.0) || !(T_i > 0.0)) throw std::domain_error("lt_rhs: temperatures must be > 0");
  const double n = rho / model.m;
  return 2.0 * model.epsilon * model.epsilon * n * lt_coefficient(model) *
         std::pow(T_k, 2.0 * model.kappa_k + 0.5) *
         std::pow(T_i, 2.0 * model.kappa_i + model.delta) * (T_k - T_i);
}

double equilibrium_temperature(double T_k, double T_i, double delta) {
  return (3.0 * T_k + delta * T_i) / (3.0 + delta);
}

}  // namespace qrgas
