// Time-indexed temperature records shared by the particle simulation, the
// relaxation ODE, and the experiment drivers.

#ifndef QRGAS_SERIES_HPP
#define QRGAS_SERIES_HPP

#include <vector>

namespace qrgas {

struct TemperatureSeries {
  std::vector<double> times;  // increasing
  std::vector<double> T_k;
  std::vector<double> T_i;
  double T_eq = 0.0;  // (3 T_k(0) + delta T_i(0)) / (3 + delta)
};

// Generic sampled scalar series used by error metrics.
struct SampledSeries {
  std::vector<double> times;
  std::vector<double> values;
};

}  // namespace qrgas

#endif
