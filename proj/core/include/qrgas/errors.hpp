// Error types thrown by the library. All derive from qrgas::Error so callers
// can catch the whole family at once.

#ifndef QRGAS_ERRORS_HPP
#define QRGAS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrgas {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Colliding pair with zero total center-of-mass energy; callers skip such pairs.
struct DegeneratePairError : Error {
  using Error::Error;
};

// Requested post-collision internal energy exceeds the available total energy.
struct UnphysicalSplitError : Error {
  using Error::Error;
};

// Kernel evaluation at a configuration where a negative exponent meets a zero
// energy. Sampled states avoid these almost surely; the guard is for callers
// probing edge configurations directly.
struct SingularConfigurationError : Error {
  using Error::Error;
};

// Adaptive quadrature ran out of subdivision budget. Carries the best estimate.
struct AccuracyError : Error {
  AccuracyError(const std::string& what, double best, double err_estimate)
      : Error(what), best_estimate(best), error_estimate(err_estimate) {}
  double best_estimate;
  double error_estimate;
};

// Trajectory never reached the requested relaxation threshold.
struct NotRelaxedError : Error {
  NotRelaxedError(const std::string& what, double gap) : Error(what), final_gap(gap) {}
  double final_gap;
};

// Rejection sampler exceeded its proposal budget (diagnostic; should not occur
// with the documented envelope).
struct SamplerStallError : Error {
  using Error::Error;
};

// Collision-rate majorant kept overflowing after the retry budget.
struct MajorantOverflowError : Error {
  using Error::Error;
};

// ODE step size underflowed (not expected for these smooth dynamics).
struct StiffnessError : Error {
  using Error::Error;
};

// Sample unsuitable for a statistical test (singular covariance, zero spread).
struct DegenerateSampleError : Error {
  using Error::Error;
};

}  // namespace qrgas

#endif
