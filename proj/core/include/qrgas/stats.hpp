// Hypothesis tests and fits used by the relaxation experiments: Henze-Zirkler
// multivariate normality, median-centered Levene (Brown-Forsythe) variance
// equality, one-sample Kolmogorov-Smirnov exponentiality, log-log power-law
// fitting, and the average relative L2 error between time series.

#ifndef QRGAS_STATS_HPP
#define QRGAS_STATS_HPP

#include <span>
#include <string>
#include <vector>

#include "qrgas/series.hpp"
#include "qrgas/vec3.hpp"

namespace qrgas {

struct TestReport {
  std::string name;
  double statistic = 0.0;
  double p_value = 0.0;  // in [0, 1]
  std::size_t n = 0;
};

// Henze-Zirkler test for trivariate normality, following the original 1990
// construction: smoothing parameter
//   beta = ((2d+1) n / 4)^(1/(d+4)) / sqrt(2),        d = 3,
// statistic
//   HZ = n ( n^-2 sum_{i,j} exp(-beta^2 D_ij / 2)
//            - 2 (1+beta^2)^(-d/2) n^-1 sum_i exp(-beta^2 D_i / (2(1+beta^2)))
//            + (1+2 beta^2)^(-d/2) ),
// with squared Mahalanobis distances D_ij between observations and D_i to the
// mean (ML covariance). The p-value uses the standard lognormal approximation
// of the null distribution. Requires n >= 20; throws DegenerateSampleError on
// a singular sample covariance.
TestReport henze_zirkler_test(std::span<const Vec3> samples);

// Brown-Forsythe (median-centered Levene) test for equal variances across the
// three groups; each group needs >= 10 observations. Throws
// DegenerateSampleError when the within-group absolute deviations all vanish.
TestReport levene_test(std::span<const double> g0, std::span<const double> g1,
                       std::span<const double> g2);

// One-sample Kolmogorov-Smirnov statistic of `samples` against the
// exponential law with the given mean; p-value from the asymptotic Kolmogorov
// distribution. When the mean is estimated from the same sample the p-values
// are approximate (conservative), which is how the relaxation experiments use
// it.
TestReport ks_exponential_test(std::span<const double> samples, double mean);

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 1.0;
  double residual = 0.0;  // RMS residual in log space
};

// Least-squares line through (log x, log y); requires >= 3 strictly positive
// points.
PowerLawFit power_law_fit(std::span<const double> xs, std::span<const double> ys);

// sqrt of the grid-trapezoid average of ((test - ref)/ref)^2 over `grid`.
// Both series are linearly interpolated onto the grid and must cover it; ref
// must be strictly positive.
double relative_l2_error(const SampledSeries& ref, const SampledSeries& test,
                         std::span<const double> grid);

// Linear interpolation helper shared by the series metrics (t must lie within
// the sampled span).
double interpolate_series(const SampledSeries& s, double t);

}  // namespace qrgas

#endif
