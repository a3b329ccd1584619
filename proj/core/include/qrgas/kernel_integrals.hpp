// Quadrature-based integrals of the collision kernel: the per-pair collision
// rate used by the particle simulation, the strip integral behind the
// small-epsilon Taylor expansion, and the resonant-limit pair of integrals.

#ifndef QRGAS_KERNEL_INTEGRALS_HPP
#define QRGAS_KERNEL_INTEGRALS_HPP

#include <functional>
#include <utility>

#include "qrgas/gas_model.hpp"
#include "qrgas/quadrature.hpp"
#include "qrgas/vec3.hpp"

namespace qrgas {

// Total collision frequency of a pair: the integral of B_eps over sigma and
// the post-collision internal energies against phi x phi. With the angular
// normalization the sigma integral is 1, and the energy integral reduces to
//
//   nu = C_B delta E_k^(kappa_k - 1/2) E_i^kappa_i E^(gamma + kappa_k + kappa_i)
//          * int_0^1 R^kappa_k (1-R)^(kappa_i + delta - 1) chi_eps(R, R0) dR,
//
// with R0 = E_k / E. The 1D integral runs over the strip
// [eta_inv(eta(R0) - eps), eta_inv(eta(R0) + eps)] after the substitution
// z = eta(R), which removes the cutoff discontinuity. Throws
// DegeneratePairError unless E > 0, E_k > 0, E_i > 0.
double pair_collision_rate(const Vec3& v, const Vec3& v_star, double I, double I_star,
                           const GasModel& model, const QuadratureOptions& opt = {});

// Same reduced strip integral evaluated with a fixed n-node Gauss rule in the
// z variable; fast path cross-validated against pair_collision_rate.
double pair_collision_rate_fixed(double E_k, double E_i, const GasModel& model,
                                 std::size_t nodes = 32);

// Strip-expansion check: for psi in C^1((0,1)) and R0 in (0,1) returns
//   lhs = int_0^1 (R - R0) psi(R) chi_eps(R, R0) dR          (adaptive, strip-aware)
//   rhs = eps^2 / (3 eta'(R0)^3) [eta'(R0) psi'(R0) - eta''(R0) psi(R0)],
// the leading small-eps behaviour of lhs.
std::pair<double, double> taylor_expansion_check(double R0,
                                                 const std::function<double(double)>& psi,
                                                 const std::function<double(double)>& psi_prime,
                                                 double eps, const QuadratureOptions& opt = {});

// Resonant asymptotics for a fixed pre-collision state: returns {J_eps, J_0}
// where
//   J_eps = iint B_eps(v, v*, I, I*, I', I'*, sigma) psi(I', I'*)
//             phi(I') phi(I'*) dI' dI'*,
//   J_0   = int_0^(I+I*) B_res(v, v*, I, I*, I', sigma)
//             psi(I', I+I* - I') phi(I') phi(I+I* - I') dI'.
// J_eps is computed by iterated adaptive quadrature in the Borgnakke-Larsen
// (z = eta(R), r) coordinates restricted to the strip; J_eps -> J_0 as
// eps -> 0 for continuous psi with compact support in (0, inf)^2.
std::pair<double, double> resonant_limit_pair(const Vec3& v, const Vec3& v_star, double I,
                                              double I_star, const Vec3& sigma,
                                              const std::function<double(double, double)>& psi,
                                              double eps, const GasModel& model,
                                              const QuadratureOptions& opt = {});

}  // namespace qrgas

#endif
