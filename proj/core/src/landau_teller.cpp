#include "qrgas/landau_teller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrgas/analytics.hpp"
#include "qrgas/errors.hpp"

namespace qrgas {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 35.0 / 384.0 - 5179.0 / 57600.0, e3 = 500.0 / 1113.0 - 7571.0 / 16695.0,
                 e4 = 125.0 / 192.0 - 393.0 / 640.0, e5 = -2187.0 / 6784.0 + 92097.0 / 339200.0,
                 e6 = 11.0 / 84.0 - 187.0 / 2100.0, e7 = -1.0 / 40.0;

struct ReducedOde {
  double T_i0, T_k0, rho;
  GasModel model;

  double T_k_of(double T_i) const { return T_k0 - (model.delta / 3.0) * (T_i - T_i0); }

  double operator()(double T_i) const {
    const double T_k = T_k_of(T_i);
    if (!(T_k > 0.0) || !(T_i > 0.0))
      throw StiffnessError("landau_teller: trajectory left the physical region");
    return lt_rhs(T_k, T_i, rho, model);
  }
};

// One accepted step of the integrator, retained for dense evaluation.
struct Step {
  double t0, h, y0, y1, f0, f1;

  // Cubic Hermite interpolant over the step; the step controller keeps the
  // local error at 1e-9 relative so the interpolation error is negligible at
  // the tolerances asserted downstream.
  double eval(double t) const {
    if (h == 0.0) return y0;
    const double theta = (t - t0) / h;
    const double h00 = (1.0 + 2.0 * theta) * (1.0 - theta) * (1.0 - theta);
    const double h10 = theta * (1.0 - theta) * (1.0 - theta);
    const double h01 = theta * theta * (3.0 - 2.0 * theta);
    const double h11 = theta * theta * (theta - 1.0);
    return h00 * y0 + h10 * h * f0 + h01 * y1 + h11 * h * f1;
  }
};

class Dopri5 {
 public:
  Dopri5(ReducedOde ode, double y0, const LTOptions& opt) : ode_(ode), opt_(opt), t_(0.0), y_(y0) {
    f_ = ode_(y_);
    h_ = initial_step();
  }

  double t() const { return t_; }
  double y() const { return y_; }

  // Advances one accepted step, not exceeding t_limit. Returns the step.
  Step advance(double t_limit) {
    std::size_t attempts = 0;
    for (;;) {
      if (++attempts > 200)
        throw StiffnessError("landau_teller: step size control failed to converge");
      double h = std::min(h_, t_limit - t_);
      if (!(h > 0.0)) throw StiffnessError("landau_teller: nonpositive step");
      if (t_ + h == t_) throw StiffnessError("landau_teller: step size underflow");

      const double k1 = f_;
      const double k2 = ode_(y_ + h * (a21 * k1));
      const double k3 = ode_(y_ + h * (a31 * k1 + a32 * k2));
      const double k4 = ode_(y_ + h * (a41 * k1 + a42 * k2 + a43 * k3));
      const double k5 = ode_(y_ + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const double k6 = ode_(y_ + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const double y1 = y_ + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const double k7 = ode_(y1);
      const double err_raw =
          h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      const double scale = opt_.abs_tol + opt_.rel_tol * std::max(std::abs(y_), std::abs(y1));
      const double err = std::abs(err_raw) / scale;

      const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      if (err <= 1.0) {
        Step step{t_, h, y_, y1, k1, k7};
        t_ += h;
        y_ = y1;
        f_ = k7;
        h_ = h * std::clamp(factor, 0.2, 5.0);
        return step;
      }
      h_ = h * std::clamp(factor, 0.1, 0.9);
    }
  }

 private:
  double initial_step() const {
    const double scale = opt_.abs_tol + opt_.rel_tol * std::abs(y_);
    if (f_ == 0.0) return 1.0;
    return 0.01 * scale / (opt_.rel_tol * std::abs(f_) + 1e-300);
  }

  ReducedOde ode_;
  LTOptions opt_;
  double t_, y_, f_, h_;
};

}  // namespace

LTTrajectory solve_landau_teller(double T_i0, double T_k0, double rho, const GasModel& model,
                                 double t_end, std::span<const double> output_grid,
                                 const LTOptions& opt) {
  if (!(T_i0 > 0.0) || !(T_k0 > 0.0))
    throw std::domain_error("solve_landau_teller: initial temperatures must be > 0");
  if (!(t_end > 0.0)) throw std::domain_error("solve_landau_teller: t_end must be > 0");
  model.validate(/*require_lt=*/true);

  ReducedOde ode{T_i0, T_k0, rho, model};
  LTTrajectory traj;
  traj.times.assign(output_grid.begin(), output_grid.end());
  traj.T_i.reserve(traj.times.size());

  std::size_t next_out = 0;
  auto emit_through = [&](const Step& step, double t_reached) {
    while (next_out < traj.times.size() && traj.times[next_out] <= t_reached) {
      traj.T_i.push_back(step.eval(traj.times[next_out]));
      ++next_out;
    }
  };

  // Grid points at t = 0 need no step.
  while (next_out < traj.times.size() && traj.times[next_out] <= 0.0) {
    traj.T_i.push_back(T_i0);
    ++next_out;
  }

  Dopri5 solver(ode, T_i0, opt);
  std::size_t steps = 0;
  while (solver.t() < t_end) {
    if (++steps > opt.max_steps) throw StiffnessError("solve_landau_teller: step budget exceeded");
    const Step step = solver.advance(t_end);
    emit_through(step, solver.t());
  }
  // Tolerate grid points a rounding error past the horizon.
  while (next_out < traj.times.size() &&
         traj.times[next_out] <= t_end * (1.0 + 1e-12)) {
    traj.T_i.push_back(solver.y());
    ++next_out;
  }
  if (next_out < traj.times.size())
    throw std::domain_error("solve_landau_teller: output grid exceeds t_end");

  traj.T_k.reserve(traj.T_i.size());
  for (double ti : traj.T_i) traj.T_k.push_back(ode.T_k_of(ti));
  return traj;
}

double relaxation_time(const LTTrajectory& traj, double delta, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw std::domain_error("relaxation_time: threshold must lie in (0,1)");
  if (traj.times.empty()) throw std::domain_error("relaxation_time: empty trajectory");
  const double T_eq = equilibrium_temperature(traj.T_k.front(), traj.T_i.front(), delta);
  const double gap0 = std::abs(traj.T_i.front() - T_eq);
  const double target = threshold * gap0;
  double prev_gap = std::abs(traj.T_i.front() - T_eq);
  if (prev_gap <= target) return traj.times.front();
  for (std::size_t j = 1; j < traj.times.size(); ++j) {
    const double gap = std::abs(traj.T_i[j] - T_eq);
    if (gap <= target) {
      // Linear interpolation of the gap between grid points.
      const double t0 = traj.times[j - 1], t1 = traj.times[j];
      const double frac = (prev_gap - target) / (prev_gap - gap);
      return t0 + frac * (t1 - t0);
    }
    prev_gap = gap;
  }
  throw NotRelaxedError("relaxation_time: threshold not reached within the trajectory", prev_gap);
}

double relaxation_horizon(double T_i0, double T_k0, double rho, const GasModel& model,
                          double threshold) {
  const double T_eq = equilibrium_temperature(T_k0, T_i0, model.delta);
  if (std::abs(T_i0 - T_eq) > 0.0)
    return landau_teller_relaxation_time(T_i0, T_k0, rho, model, threshold);
  // Linearize about the fixed point: perturb T_i along the conservation line.
  const double h = 1e-4 * T_eq;
  const double rate =
      std::abs(lt_rhs(T_eq + (model.delta / 3.0) * h, T_eq - h, rho, model)) / h;
  return 5.0 / rate;
}

double landau_teller_relaxation_time(double T_i0, double T_k0, double rho, const GasModel& model,
                                     double threshold, const LTOptions& opt) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw std::domain_error("landau_teller_relaxation_time: threshold must lie in (0,1)");
  model.validate(/*require_lt=*/true);
  const double T_eq = equilibrium_temperature(T_k0, T_i0, model.delta);
  const double gap0 = std::abs(T_i0 - T_eq);
  if (gap0 == 0.0) return 0.0;
  const double target = threshold * gap0;

  ReducedOde ode{T_i0, T_k0, rho, model};
  Dopri5 solver(ode, T_i0, opt);
  std::size_t steps = 0;
  // The event always fires: T_eq is globally attracting on the physical
  // region. The generous horizon only guards against runaway configurations.
  const double t_horizon = 1e30;
  while (true) {
    if (++steps > opt.max_steps)
      throw NotRelaxedError("landau_teller_relaxation_time: step budget exceeded",
                            std::abs(solver.y() - T_eq));
    const Step step = solver.advance(t_horizon);
    if (std::abs(solver.y() - T_eq) <= target) {
      // Bisect the dense output for the crossing time.
      double lo = step.t0, hi = step.t0 + step.h;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (std::abs(step.eval(mid) - T_eq) <= target)
          hi = mid;
        else
          lo = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
}

}  // namespace qrgas
