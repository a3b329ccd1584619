#include "qrgas/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrgas/errors.hpp"
#include "qrgas/special_functions.hpp"

namespace qrgas {

namespace {

// Cholesky factor of a symmetric positive definite 3x3 matrix (row-major
// lower triangle); returns false when the matrix is numerically singular.
bool cholesky3(const double a[3][3], double l[3][3]) {
  double tmp[3][3] = {};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a[i][j];
      for (int k = 0; k < j; ++k) s -= tmp[i][k] * tmp[j][k];
      if (i == j) {
        if (!(s > 0.0)) return false;
        tmp[i][i] = std::sqrt(s);
      } else {
        tmp[i][j] = s / tmp[j][j];
      }
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) l[i][j] = tmp[i][j];
  return true;
}

inline Vec3 forward_solve(const double l[3][3], const Vec3& b) {
  Vec3 y;
  y.x = b.x / l[0][0];
  y.y = (b.y - l[1][0] * y.x) / l[1][1];
  y.z = (b.z - l[2][0] * y.x - l[2][1] * y.y) / l[2][2];
  return y;
}

double median_of(std::vector<double> v) {
  const std::size_t n = v.size();
  auto mid = v.begin() + n / 2;
  std::nth_element(v.begin(), mid, v.end());
  double hi = *mid;
  if (n % 2 == 1) return hi;
  std::nth_element(v.begin(), v.begin() + n / 2 - 1, v.end());
  return 0.5 * (v[n / 2 - 1] + hi);
}

}  // namespace

TestReport henze_zirkler_test(std::span<const Vec3> samples) {
  const std::size_t n = samples.size();
  if (n < 20) throw std::invalid_argument("henze_zirkler_test: need at least 20 samples");
  constexpr double d = 3.0;

  Vec3 mean{};
  for (const auto& s : samples) mean += s;
  mean *= 1.0 / static_cast<double>(n);

  double cov[3][3] = {};
  for (const auto& s : samples) {
    const Vec3 c = s - mean;
    const double ci[3] = {c.x, c.y, c.z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j <= i; ++j) cov[i][j] += ci[i] * ci[j];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) {
      cov[i][j] /= static_cast<double>(n);  // ML covariance
      cov[j][i] = cov[i][j];
    }
  double l[3][3];
  if (!cholesky3(cov, l))
    throw DegenerateSampleError("henze_zirkler_test: singular sample covariance");

  // Whitened deviations make D_ij plain squared distances.
  std::vector<Vec3> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = forward_solve(l, samples[i] - mean);

  const double nd = static_cast<double>(n);
  const double b2 = 0.5 * std::pow((2.0 * d + 1.0) * nd / 4.0, 2.0 / (d + 4.0));

  double pair_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 zi = z[i];
    double row = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) row += std::exp(-0.5 * b2 * norm2(zi - z[j]));
    pair_sum += row;
  }
  pair_sum = 2.0 * pair_sum + nd;  // diagonal terms are exp(0)

  double center_sum = 0.0;
  const double shrink = 0.5 * b2 / (1.0 + b2);
  for (const auto& zi : z) center_sum += std::exp(-shrink * norm2(zi));

  const double hz = nd * (pair_sum / (nd * nd) -
                          2.0 * std::pow(1.0 + b2, -0.5 * d) * center_sum / nd +
                          std::pow(1.0 + 2.0 * b2, -0.5 * d));

  // Lognormal approximation of the null distribution.
  const double a = 1.0 + 2.0 * b2;
  const double wb = (1.0 + b2) * (1.0 + 3.0 * b2);
  const double b4 = b2 * b2, b8 = b4 * b4;
  const double mu = 1.0 - std::pow(a, -0.5 * d) *
                              (1.0 + d * b2 / a + d * (d + 2.0) * b4 / (2.0 * a * a));
  const double si2 =
      2.0 * std::pow(1.0 + 4.0 * b2, -0.5 * d) +
      2.0 * std::pow(a, -d) *
          (1.0 + 2.0 * d * b4 / (a * a) + 3.0 * d * (d + 2.0) * b8 / (4.0 * std::pow(a, 4.0))) -
      4.0 * std::pow(wb, -0.5 * d) *
          (1.0 + 3.0 * d * b4 / (2.0 * wb) + d * (d + 2.0) * b8 / (2.0 * wb * wb));
  const double pmu = std::log(std::sqrt(mu * mu * mu * mu / (si2 + mu * mu)));
  const double psi = std::sqrt(std::log((si2 + mu * mu) / (mu * mu)));

  TestReport r;
  r.name = "henze_zirkler";
  r.statistic = hz;
  r.p_value = hz > 0.0 ? normal_sf((std::log(hz) - pmu) / psi) : 1.0;
  r.n = n;
  return r;
}

TestReport levene_test(std::span<const double> g0, std::span<const double> g1,
                       std::span<const double> g2) {
  const std::span<const double> groups[3] = {g0, g1, g2};
  constexpr double k = 3.0;
  std::size_t total = 0;
  for (const auto& g : groups) {
    if (g.size() < 10) throw std::invalid_argument("levene_test: each group needs >= 10 values");
    total += g.size();
  }

  double zbar_all = 0.0;
  double zbar[3], ns[3];
  std::vector<double> devs[3];
  for (int gi = 0; gi < 3; ++gi) {
    const auto& g = groups[gi];
    const double med = median_of(std::vector<double>(g.begin(), g.end()));
    devs[gi].reserve(g.size());
    double sum = 0.0;
    for (double x : g) {
      const double z = std::abs(x - med);
      devs[gi].push_back(z);
      sum += z;
    }
    ns[gi] = static_cast<double>(g.size());
    zbar[gi] = sum / ns[gi];
    zbar_all += sum;
  }
  zbar_all /= static_cast<double>(total);

  double between = 0.0, within = 0.0;
  for (int gi = 0; gi < 3; ++gi) {
    between += ns[gi] * (zbar[gi] - zbar_all) * (zbar[gi] - zbar_all);
    for (double z : devs[gi]) within += (z - zbar[gi]) * (z - zbar[gi]);
  }
  if (!(within > 0.0))
    throw DegenerateSampleError("levene_test: zero within-group deviation");

  const double nd = static_cast<double>(total);
  const double w = (nd - k) / (k - 1.0) * between / within;

  TestReport r;
  r.name = "levene";
  r.statistic = w;
  r.p_value = f_distribution_sf(w, k - 1.0, nd - k);
  r.n = total;
  return r;
}

TestReport ks_exponential_test(std::span<const double> samples, double mean) {
  if (samples.empty()) throw std::invalid_argument("ks_exponential_test: empty sample");
  if (!(mean > 0.0)) throw std::invalid_argument("ks_exponential_test: mean must be > 0");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double nd = static_cast<double>(sorted.size());
  double d_stat = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = -std::expm1(-sorted[i] / mean);
    const double d_plus = (static_cast<double>(i) + 1.0) / nd - cdf;
    const double d_minus = cdf - static_cast<double>(i) / nd;
    d_stat = std::max({d_stat, d_plus, d_minus});
  }
  TestReport r;
  r.name = "ks_exponential";
  r.statistic = d_stat;
  r.p_value = kolmogorov_sf(std::sqrt(nd) * d_stat);
  r.n = sorted.size();
  return r;
}

PowerLawFit power_law_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw std::invalid_argument("power_law_fit: need >= 3 paired points");
  const std::size_t n = xs.size();
  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
      throw std::domain_error("power_law_fit: data must be strictly positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw std::domain_error("power_law_fit: abscissae are all equal");
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.prefactor = std::exp(my - fit.exponent * mx);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = ly[i] - (my + fit.exponent * (lx[i] - mx));
    ss += resid * resid;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(n));
  return fit;
}

double interpolate_series(const SampledSeries& s, double t) {
  if (s.times.empty() || s.times.size() != s.values.size())
    throw std::invalid_argument("interpolate_series: malformed series");
  if (t < s.times.front() || t > s.times.back())
    throw std::domain_error("interpolate_series: time outside the sampled span");
  const auto it = std::lower_bound(s.times.begin(), s.times.end(), t);
  if (it == s.times.begin()) return s.values.front();
  const std::size_t hi = static_cast<std::size_t>(it - s.times.begin());
  const std::size_t lo = hi - 1;
  const double span = s.times[hi] - s.times[lo];
  if (span <= 0.0) return s.values[hi];
  const double frac = (t - s.times[lo]) / span;
  return s.values[lo] + frac * (s.values[hi] - s.values[lo]);
}

double relative_l2_error(const SampledSeries& ref, const SampledSeries& test,
                         std::span<const double> grid) {
  if (grid.size() < 2) throw std::invalid_argument("relative_l2_error: grid needs >= 2 points");
  std::vector<double> sq(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = interpolate_series(ref, grid[i]);
    if (!(r > 0.0)) throw std::domain_error("relative_l2_error: reference must be > 0");
    const double dev = (interpolate_series(test, grid[i]) - r) / r;
    sq[i] = dev * dev;
  }
  double integral = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    integral += 0.5 * (sq[i] + sq[i - 1]) * (grid[i] - grid[i - 1]);
  const double span = grid.back() - grid.front();
  if (!(span > 0.0)) throw std::domain_error("relative_l2_error: grid must be increasing");
  return std::sqrt(integral / span);
}

}  // namespace qrgas
