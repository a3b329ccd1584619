// Deterministic random number generation.
//
// Core generator: xoshiro256++ (Blackman & Vigna), state seeded through
// SplitMix64. Independent streams are derived from a (seed, stream) pair, so
// concurrent jobs can draw from non-overlapping deterministic sequences. All
// variate transformations are implemented here (not via <random>
// distributions) so sequences are bit-reproducible across platforms and
// standard library versions.

#ifndef QRGAS_RANDOM_HPP
#define QRGAS_RANDOM_HPP

#include <cstdint>

#include "qrgas/vec3.hpp"

namespace qrgas {

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();
  // Uniform in [a, b).
  double uniform(double a, double b);
  // Uniform integer in [0, n), n > 0 (Lemire-style rejection-free enough for
  // our n << 2^64; uses multiply-shift with rejection on the biased band).
  std::uint64_t uniform_index(std::uint64_t n);

  // Standard normal via Box-Muller; the second variate is cached.
  double normal();
  // Exponential with unit mean, -log(1 - U).
  double exponential();
  // Gamma(shape, scale = 1) by Marsaglia-Tsang for shape >= 1 (the only range
  // needed: shapes are delta/2 >= 1), with the exponential special case.
  double gamma(double shape);
  // Beta(a, a) via two Gamma draws; Beta(1, 1) short-circuits to uniform.
  double symmetric_beta(double a);
  // Uniform direction on the unit sphere.
  Vec3 unit_vector();

 private:
  std::uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// SplitMix64 step; also used to hash (seed, stream) pairs into states.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace qrgas

#endif
