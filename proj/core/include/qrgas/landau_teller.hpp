// Landau-Teller temperature relaxation: the internal temperature obeys
//
//   dT_i/dt = lt_rhs(T_k(t), T_i(t)),
//   (3/2) dT_k/dt + (delta/2) dT_i/dt = 0,
//
// so T_k is eliminated algebraically through the conserved combination
// 3 T_k + delta T_i and only a scalar ODE is integrated. The integrator is an
// embedded Dormand-Prince 5(4) pair with fourth-order dense output.

#ifndef QRGAS_LANDAU_TELLER_HPP
#define QRGAS_LANDAU_TELLER_HPP

#include <span>
#include <vector>

#include "qrgas/gas_model.hpp"

namespace qrgas {

struct LTTrajectory {
  std::vector<double> times;  // increasing
  std::vector<double> T_i;
  std::vector<double> T_k;
};

struct LTOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  std::size_t max_steps = 2000000;
};

// Integrates from (T_i0, T_k0) to t_end and samples the dense solution on
// output_grid (values must lie in [0, t_end], increasing). rho is the mass
// density entering the collision rate. Throws StiffnessError on step-size
// underflow (not expected for these smooth dynamics).
LTTrajectory solve_landau_teller(double T_i0, double T_k0, double rho, const GasModel& model,
                                 double t_end, std::span<const double> output_grid,
                                 const LTOptions& opt = {});

// First time t with |T_i(t) - T_eq| <= threshold * |T_i(0) - T_eq|, linearly
// interpolated between grid points; T_eq is computed from the trajectory's
// initial temperatures. Throws NotRelaxedError (carrying the final gap) when
// the trajectory never reaches the threshold.
double relaxation_time(const LTTrajectory& traj, double delta, double threshold);

// Integrates until the relaxation event fires and returns that time directly.
// Used when the horizon is not known in advance (relaxation times scale as
// epsilon^-2).
double landau_teller_relaxation_time(double T_i0, double T_k0, double rho, const GasModel& model,
                                     double threshold, const LTOptions& opt = {});

// Relaxation time, or five linearized e-folding times at the common
// equilibrium temperature when the start is already at equilibrium (so that
// equilibrium comparisons still get a natural observation window).
double relaxation_horizon(double T_i0, double T_k0, double rho, const GasModel& model,
                          double threshold);

}  // namespace qrgas

#endif
