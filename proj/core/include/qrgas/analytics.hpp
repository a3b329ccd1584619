// Closed-form equilibrium distributions, Gamma-moment formulas, and the
// Landau-Teller relaxation coefficient and right-hand side.
//
// Distributions are normalized so that integrating against dv phi(I) dI gives
// the number density rho / m. Temperatures follow the equipartition
// conventions used throughout:
//
//   T_k = m <|v - u|^2> / 3,      T_i = 2 <I> / delta,
//
// which make 3 T_k + delta T_i = (3 + delta) T_eq hold exactly.

#ifndef QRGAS_ANALYTICS_HPP
#define QRGAS_ANALYTICS_HPP

#include <utility>

#include "qrgas/gas_model.hpp"
#include "qrgas/vec3.hpp"

namespace qrgas {

struct MaxwellianParams {
  double rho = 1.0;  // mass density, > 0
  Vec3 u{};          // bulk velocity
  double T = 1.0;    // temperature, > 0
};

struct TwoTempMaxwellian {
  double rho = 1.0;
  Vec3 u{};
  double T_k = 1.0;  // kinetic temperature, > 0
  double T_i = 1.0;  // internal temperature, > 0
};

// Internal partition function and degrees-of-freedom function for the
// polytropic energy law phi(I) = I^(delta/2 - 1):
//   Z(beta)  = Gamma(delta/2) beta^(-delta/2)   evaluated at beta = 1/T,
//   delta(T) = -(2/T) (log Z)'(1/T) = delta     (constant for this law).
// Returns {Z(1/T), delta(T)}.
std::pair<double, double> partition_and_dof(double T, double delta);

// One-temperature Maxwellian density at (v, I):
//   (rho/m) (2 pi T / m)^(-3/2) Z(1/T)^(-1) exp(-m|v-u|^2 / (2T) - I/T).
double maxwellian(const MaxwellianParams& p, const Vec3& v, double I, const GasModel& model);

// Two-temperature variant: T -> T_k in the Gaussian factor and its
// normalization, T -> T_i in the internal factor and Z(1/T_i).
double maxwellian(const TwoTempMaxwellian& p, const Vec3& v, double I, const GasModel& model);

// Normalized moments of pair energies under the (two-temperature) Maxwellian:
//   kinetic_moment(beta, T)          = <E_k^beta> = Gamma(beta + 3/2) / Gamma(3/2) T^beta,
//   internal_moment(beta, T, delta)  = <E_i^beta> = Gamma(beta + delta) / Gamma(delta) T^beta,
// where E_k = (m/4)|v - v_star|^2 over two velocities at temperature T and
// E_i = I + I_star over two internal energies at temperature T. Preconditions
// beta > -3/2 and beta > -delta respectively (throws std::domain_error).
double kinetic_moment(double beta, double T);
double internal_moment(double beta, double T, double delta);

// Relaxation coefficient
//   C = C_B / 12 * Gamma(2 kappa_k + 3) Gamma(2 kappa_i + 2 delta + 1)
//         / (Gamma(3/2) Gamma(delta)).
// Throws std::domain_error when a Gamma argument is nonpositive.
double lt_coefficient(const GasModel& model);

// Initial slope dT_i/dt for a two-temperature Maxwellian state at number
// density n = rho / m, to leading order in epsilon:
//
//   dT_i/dt = 2 eps^2 n C T_k^(2 kappa_k + 1/2) T_i^(2 kappa_i + delta) (T_k - T_i).
//
// The factor 2 n C (rather than rho C) is what the weak form of the collision
// operator yields under the equipartition temperature conventions above; the
// unit tests pin it independently against a Monte Carlo integration of the
// exchange term.
double lt_rhs(double T_k, double T_i, double rho, const GasModel& model);

// (3 T_k + delta T_i) / (3 + delta), the common equilibrium temperature.
double equilibrium_temperature(double T_k, double T_i, double delta);

}  // namespace qrgas

#endif
