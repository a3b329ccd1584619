// Experiment protocols shared by the command line tool and the acceptance
// suite: particle-simulation vs relaxation-ODE comparison, the epsilon sweep
// with its power-law fit, the Maxwellianization timing experiment, and the
// quadrature verification tables.

#ifndef QRGAS_EXPERIMENTS_HPP
#define QRGAS_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qrgas/dsmc.hpp"
#include "qrgas/gas_model.hpp"
#include "qrgas/landau_teller.hpp"
#include "qrgas/series.hpp"
#include "qrgas/stats.hpp"

namespace qrgas::experiments {

struct ExperimentConfig {
  GasModel model;
  InitialCondition initial;
  std::size_t particles = 100000;
  std::size_t output_points = 200;
  std::uint64_t seed = 12345;
  double threshold = 0.01;  // relaxation threshold (fraction of the initial gap)
  double t_end = 0.0;       // 0: use the relaxation time from the ODE
  unsigned jobs = 1;        // concurrent sweep jobs
  DsmcOptions dsmc;
};

struct CompareResult {
  TemperatureSeries dsmc;
  LTTrajectory lt;
  std::vector<double> rel_err;  // |T_i - T_i_ode| / T_i_ode on the grid
  double tau = 0.0;             // ODE relaxation time at `threshold`
  double mean_rel_l2 = 0.0;     // average relative L2 error over [0, tau]
};

// Runs the particle simulation and the relaxation ODE from the same initial
// temperatures on a shared uniform grid over [0, t_end] (default: the
// relaxation horizon tau).
CompareResult run_compare(const ExperimentConfig& config);

struct SweepPoint {
  double epsilon = 0.0;
  double tau = 0.0;
  double rel_l2 = 0.0;
  bool ok = false;
  std::string error;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  bool fit_ok = false;
  bool degenerate = false;  // errors identically zero (self-comparison)
  PowerLawFit fit;
};

// Produces the simulated internal-temperature series for one epsilon over
// [0, tau]; injectable so the protocol can be exercised without particle
// runs.
using SeriesProvider = std::function<TemperatureSeries(const ExperimentConfig&, double tau)>;

// For each epsilon: relax both dynamics over [0, tau_eps], compute the average
// relative L2 error, then fit error ~ eps^q. Failures are recorded per point
// and the sweep continues. Per-point seeds derive from (seed, point index).
SweepResult run_sweep(const ExperimentConfig& base, std::span<const double> eps_values,
                      const SeriesProvider& provider = {});

std::vector<double> log_uniform_grid(double lo, double hi, std::size_t count);

struct TimedReport {
  double time = 0.0;
  TestReport report;
};

struct MaxwellianizationResult {
  std::vector<TimedReport> reports;
  // First time after which the p-value stays above 0.05 for 5 consecutive
  // outputs (NaN when never sustained).
  double t_normality = 0.0;
  double t_isotropy = 0.0;
  double t_exponential = 0.0;
  double t_maxwellian = 0.0;   // max of the three
  double tau_temperature = 0.0;  // ODE relaxation time for the same temperatures
};

// Runs the three closeness tests (Henze-Zirkler, Levene, Kolmogorov-Smirnov
// against the exponential with the sample mean) on ensemble snapshots over a
// uniform grid. The tests see a strided subsample of at most stats_subsample
// particles (the pairwise Henze-Zirkler sum is quadratic in the sample size).
MaxwellianizationResult run_maxwellianization(const ExperimentConfig& config,
                                              std::size_t stats_subsample = 10000);

struct CheckRow {
  std::string name;
  double observed = 0.0;
  double bound_lo = 0.0;
  double bound_hi = 0.0;
  bool pass = false;
};

// Strip-expansion checks (cutoff machinery only, model independent): ratio
// lhs/rhs at eps = 1e-3 for psi in {R^(1/2)(1-R)^(1/2), R(1-R)^2} and R0 in
// {0.2, 0.5, 0.8} (rows with rhs = 0 are skipped), plus the higher-order
// remainder decay |lhs-rhs|/eps^3 shrinking by at least 1.8x per halving of
// eps across {0.1, 0.05, 0.025}.
std::vector<CheckRow> taylor_lemma_checks();

// Resonant-limit convergence: for n_states random pre-collision states and a
// smooth compactly supported bump psi, fits the log-log slope of
// |J_eps - J_0| / J_0 over eps in [1e-3, 1e-1] and requires it in [1.8, 2.2].
std::vector<CheckRow> resonant_asymptotics_checks(const GasModel& model, std::size_t n_states,
                                                  std::uint64_t seed);

}  // namespace qrgas::experiments

#endif
