#include "qrgas/random.hpp"

#include <cmath>
#include <stdexcept>

namespace qrgas {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  // Fold the stream id into the seeding state; distinct (seed, stream) pairs
  // give unrelated xoshiro states.
  std::uint64_t sm = seed;
  splitmix64(sm);
  sm ^= 0xA3C59AC2u + stream * 0x9E3779B97F4A7C15ull;
  for (auto& w : s_) w = splitmix64(sm);
  // All-zero state is invalid for xoshiro; splitmix output makes this
  // essentially impossible, but keep the guard.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be > 0");
  // Rejection from the top keeps the draw exactly uniform.
  const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller; u in (0, 1] so the log is finite.
  const double u = 1.0 - uniform();
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * M_PI * v;
  cached_normal_ = r * std::sin(angle);
  has_cached_normal_ = true;
  return r * std::cos(angle);
}

double Rng::exponential() { return -std::log1p(-uniform()); }

double Rng::gamma(double shape) {
  if (!(shape >= 1.0)) throw std::invalid_argument("gamma: shape must be >= 1");
  if (shape == 1.0) return exponential();
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::symmetric_beta(double a) {
  if (a == 1.0) return uniform();
  const double x = gamma(a);
  const double y = gamma(a);
  return x / (x + y);
}

Vec3 Rng::unit_vector() {
  const double c = uniform(-1.0, 1.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double phi = 2.0 * M_PI * uniform();
  return {s * std::cos(phi), s * std::sin(phi), c};
}

}  // namespace qrgas
