// Collision geometry, the logit truncation machinery and evaluation of the
// reference, quasi-resonant, and resonant collision kernels.
//
// Conventions, for a colliding pair with velocities (v, v_star) and internal
// energies (I, I_star):
//
//   E_k = (m/4) |v - v_star|^2        pair kinetic energy (center of mass)
//   E_i = I + I_star                  pair internal energy
//   E   = E_k + E_i                   total center-of-mass energy, conserved
//   R'  = E_k / E                     pre-collision kinetic fraction
//   R   = E_k' / E = 1 - E_i' / E     post-collision kinetic fraction
//
// Quasi-resonance selects collisions with |eta(R) - eta(R')| <= epsilon where
// eta is the logit, eta(R) = log(R / (1-R)).

#ifndef QRGAS_KINEMATICS_HPP
#define QRGAS_KINEMATICS_HPP

#include <utility>

#include "qrgas/gas_model.hpp"
#include "qrgas/vec3.hpp"

namespace qrgas {

// Borgnakke-Larsen decomposition of a colliding pair's energy.
struct EnergySplit {
  double E = 0.0;    // total center-of-mass energy
  double E_k = 0.0;  // kinetic part
  double E_i = 0.0;  // internal part
  double R = 0.0;    // kinetic fraction E_k / E
};

// Full pre/post collision state at which kernels are evaluated.
struct CollisionQuadruple {
  Vec3 v, v_star;
  double I = 0.0, I_star = 0.0;
  double I_prime = 0.0, I_star_prime = 0.0;
  Vec3 sigma{1.0, 0.0, 0.0};  // unit vector, |sigma| = 1 within 1e-12
};

// E_k = (m/4)|v - v_star|^2, E_i = I + I_star, E = E_k + E_i, R = E_k / E.
// Throws DegeneratePairError when E == 0 (zero relative speed and zero
// internal energies); callers must skip such pairs.
EnergySplit energy_decomposition(const Vec3& v, const Vec3& v_star, double I, double I_star,
                                 const GasModel& model);

// Post-collision velocities for a given total energy E and post-collision
// internal energy E_i_prime:
//
//   v'      = G + sqrt((E - E_i_prime)/m) sigma,
//   v'_star = G - sqrt((E - E_i_prime)/m) sigma,   G = (v + v_star)/2.
//
// The prefactor makes (m/4)|v' - v'_star|^2 = E - E_i_prime, so momentum and
// total energy are conserved to rounding. Throws UnphysicalSplitError when
// E_i_prime > E.
std::pair<Vec3, Vec3> post_collision_velocities(const Vec3& v, const Vec3& v_star, double E,
                                                double E_i_prime, const Vec3& sigma, double m);

// Logit diffeomorphism from (0,1) to R and friends. eta and eta_prime throw
// std::domain_error outside (0,1).
double eta(double R);
double eta_prime(double R);         // 1 / (R (1 - R))
double eta_second(double R);        // (2R - 1) / (R^2 (1-R)^2)
double eta_inv(double z);           // logistic, 1 / (1 + exp(-z))

// Cutoff density on the resonance strip:
//   chi_eps(R, R') = sqrt(eta'(R) eta'(R')) / (2 eps)  when |eta(R)-eta(R')| <= eps,
//                    0 otherwise.
// Symmetric in (R, R'); on the diagonal equals eta'(R) / (2 eps).
double chi_epsilon(double R, double R_prime, double eps);

// Normalization of the admissible internal-energy simplex under phi x phi with
// phi(I) = I^(delta/2 - 1):
//   m_phi(E)  = Gamma(delta/2)^2 / Gamma(delta+1) * E^delta,
//   m_phi'(E) = Gamma(delta/2)^2 / Gamma(delta)   * E^(delta-1).
// Returns {m_phi(E), m_phi'(E)}.
std::pair<double, double> m_phi_pair(double E, double delta);

// Reference polyatomic kernel with the isotropic angular kernel b = 1/(4 pi):
//   C_B b E_k^(kappa_k-1/2) E_k'^kappa_k E_i^kappa_i E_i'^kappa_i E^gamma
//     * 1[E_i' <= E] / m_phi(E),   E_k' = E - E_i'.
// Returns 0 outside the support. Throws SingularConfigurationError when a
// negative exponent meets a zero energy (E_k = 0 with kappa_k < 1/2, or
// E_i = 0 / E_i' = 0 with kappa_i < 0).
double kernel_reference(const CollisionQuadruple& q, const GasModel& model);

// kernel_reference * chi_eps(R, R'), R = 1 - E_i'/E, R' = 1 - E_i/E.
double kernel_quasi_resonant(const CollisionQuadruple& q, const GasModel& model);

// Resonant kernel associated with the reference kernel:
//   B_res(v, v_star, I, I_star, I', sigma)
//     = B(v, v_star, I, I_star, I', I + I_star - I', sigma) * E * 1[I' <= I + I_star].
double kernel_resonant(const Vec3& v, const Vec3& v_star, double I, double I_star, double I_prime,
                       const Vec3& sigma, const GasModel& model);

}  // namespace qrgas

#endif
