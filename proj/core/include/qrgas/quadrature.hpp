// Adaptive 1D integration (globally adaptive Gauss-Kronrod 15(7)) and fixed
// Gauss-Legendre rules.

#ifndef QRGAS_QUADRATURE_HPP
#define QRGAS_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace qrgas {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::size_t max_intervals = 10000;
};

// Integrates f over [a, b] (a < b) until the accumulated error estimate drops
// below max(abs_tol, rel_tol * |value|). Worst interval is bisected first, so
// integrable endpoint singularities of type x^p, p > -1, converge by
// subdivision toward the endpoint. Throws AccuracyError (carrying the best
// estimate) when the subdivision budget runs out.
QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& opt = {});

inline QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a,
                                           double b, double rel_tol, double abs_tol) {
  return adaptive_integrate(f, a, b, QuadratureOptions{rel_tol, abs_tol, 10000});
}

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], computed by
// Newton iteration on the Legendre recurrence (machine accurate, cached).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(std::size_t n);

// Fixed-rule integral of f over [a, b] with the cached n-point rule.
double gauss_fixed(const std::function<double(double)>& f, double a, double b, std::size_t n = 32);

}  // namespace qrgas

#endif
