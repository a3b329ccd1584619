#include "qrgas/dsmc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qrgas/analytics.hpp"
#include "qrgas/errors.hpp"
#include "qrgas/kernel_integrals.hpp"

namespace qrgas {

namespace {

inline double log_logistic(double z) {
  return z < 0.0 ? z - std::log1p(std::exp(z)) : -std::log1p(std::exp(-z));
}

inline double particle_energy(const Particle& p, double m) {
  return 0.5 * m * norm2(p.v) + p.I;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ensemble setup and moment estimation
// ---------------------------------------------------------------------------

Ensemble Ensemble::sample(const InitialCondition& init, std::size_t n, const GasModel& model,
                          std::uint64_t seed, std::uint64_t stream) {
  model.validate();
  if (n < 2) throw std::invalid_argument("Ensemble::sample: need at least 2 particles");
  if (!(init.rho > 0.0)) throw std::domain_error("Ensemble::sample: rho must be > 0");
  if (!(init.T_k > 0.0) || !(init.T_i > 0.0))
    throw std::domain_error("Ensemble::sample: temperatures must be > 0");

  Rng rng(seed, stream);
  std::vector<Particle> particles(n);
  const double m = model.m;
  switch (init.kind) {
    case InitialCondition::Kind::TwoTempMaxwellian: {
      const double sv = std::sqrt(init.T_k / m);
      const double shape = 0.5 * model.delta;
      for (auto& p : particles) {
        p.v = init.u + Vec3{sv * rng.normal(), sv * rng.normal(), sv * rng.normal()};
        p.I = init.T_i * rng.gamma(shape);
      }
      break;
    }
    case InitialCondition::Kind::Uniform: {
      // Velocity cube with per-component variance T_k / m; energies uniform
      // with mean (delta/2) T_i.
      const double a = std::sqrt(3.0 * init.T_k / m);
      const double I_max = model.delta * init.T_i;
      for (auto& p : particles) {
        p.v = init.u + Vec3{rng.uniform(-a, a), rng.uniform(-a, a), rng.uniform(-a, a)};
        p.I = I_max * rng.uniform();
      }
      break;
    }
    case InitialCondition::Kind::AnisotropicNormalUniform: {
      const double mean_factor = (init.anisotropy.x + init.anisotropy.y + init.anisotropy.z) / 3.0;
      if (!(mean_factor > 0.0) || !(init.anisotropy.x > 0.0) || !(init.anisotropy.y > 0.0) ||
          !(init.anisotropy.z > 0.0))
        throw std::domain_error("Ensemble::sample: anisotropy factors must be > 0");
      const Vec3 s{std::sqrt(init.T_k * init.anisotropy.x / (mean_factor * m)),
                   std::sqrt(init.T_k * init.anisotropy.y / (mean_factor * m)),
                   std::sqrt(init.T_k * init.anisotropy.z / (mean_factor * m))};
      const double I_max = model.delta * init.T_i;
      for (auto& p : particles) {
        p.v = init.u + Vec3{s.x * rng.normal(), s.y * rng.normal(), s.z * rng.normal()};
        p.I = I_max * rng.uniform();
      }
      break;
    }
  }
  const double n_eff = (init.rho / m) / static_cast<double>(n);
  return Ensemble(std::move(particles), model, n_eff, rng);
}

Moments estimate_moments(std::span<const Particle> particles, double n_eff,
                         const GasModel& model) {
  if (particles.size() < 2) throw std::invalid_argument("estimate_moments: need >= 2 particles");
  const double inv_n = 1.0 / static_cast<double>(particles.size());
  Vec3 u{};
  for (const auto& p : particles) u += p.v;
  u *= inv_n;
  double sum_c2 = 0.0, sum_I = 0.0;
  for (const auto& p : particles) {
    sum_c2 += norm2(p.v - u);
    sum_I += p.I;
  }
  Moments mo;
  mo.number_density = n_eff * static_cast<double>(particles.size());
  mo.u = u;
  mo.T_k = model.m * sum_c2 * inv_n / 3.0;
  mo.T_i = 2.0 * sum_I * inv_n / model.delta;
  return mo;
}

Moments Ensemble::moments() const { return estimate_moments(particles_, n_eff_, model_); }

// ---------------------------------------------------------------------------
// Post-collision energy redistribution
// ---------------------------------------------------------------------------

PostCollisionSample sample_post_collision_energies(const EnergySplit& split, const GasModel& model,
                                                   Rng& rng) {
  if (!(split.E > 0.0) || !(split.E_k > 0.0) || !(split.E_i > 0.0))
    throw DegeneratePairError("sample_post_collision_energies: degenerate split");
  const double eps = model.epsilon;
  const double a = model.kappa_k + 0.5;
  const double b = model.kappa_i + model.delta - 0.5;
  const double z0 = std::log(split.E_k / split.E_i);
  const double z_lo = z0 - eps, z_hi = z0 + eps;

  auto target = [&](double z) { return a * log_logistic(z) + b * log_logistic(-z); };
  double log_sup = std::max(target(z_lo), target(z_hi));
  if (a > 0.0 && b > 0.0) {
    const double z_star = std::log(a / b);
    if (z_star > z_lo && z_star < z_hi) log_sup = std::max(log_sup, target(z_star));
  }

  double z = 0.0;
  bool ok = false;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    z = rng.uniform(z_lo, z_hi);
    if (std::log(1.0 - rng.uniform()) <= target(z) - log_sup) {
      ok = true;
      break;
    }
  }
  if (!ok)
    throw SamplerStallError("sample_post_collision_energies: envelope rejection stalled");

  const double one_minus_R = 1.0 / (1.0 + std::exp(z));  // logistic(-z)
  const double E_i_prime = one_minus_R * split.E;
  const double r = rng.symmetric_beta(0.5 * model.delta);
  PostCollisionSample out;
  out.I_prime = r * E_i_prime;
  out.I_star_prime = (1.0 - r) * E_i_prime;
  out.sigma = rng.unit_vector();
  return out;
}

// ---------------------------------------------------------------------------
// Reduced strip-rate table
// ---------------------------------------------------------------------------

namespace {

// The pair rate factorizes as nu = K E^p w(z0) with z0 = log(E_k / E_i),
//   K = C_B delta / (2 eps),  p = gamma + 2 kappa_k + 2 kappa_i - 1/2,
//   w(z0) = R0^(kappa_k - 1) (1-R0)^(kappa_i - 1/2) *
//             int_{z0-eps}^{z0+eps} R^(kappa_k+1/2) (1-R)^(kappa_i+delta-1/2) dz.
// w is tabulated on a uniform z grid (log-space Catmull-Rom interpolation) and
// bounded by w_star, which is what makes the per-particle majorant h_i work.
class StripRateTable {
 public:
  explicit StripRateTable(const GasModel& model)
      : eps_(model.epsilon),
        a_(model.kappa_k + 0.5),
        b_(model.kappa_i + model.delta - 0.5),
        pre_l_(model.kappa_k - 1.0),
        pre_r_(model.kappa_i - 0.5) {
    // Tail exponents of w; nonnegative values keep sup w finite, which the
    // composition majorant requires.
    const double tail_left = 2.0 * model.kappa_k - 0.5;
    const double tail_right = 2.0 * model.kappa_i + model.delta - 1.0;
    if (tail_left < 0.0 || tail_right < 0.0)
      throw std::invalid_argument(
          "dsmc: model exponents leave the pair rate unbounded on the simplex "
          "(requires kappa_k >= 1/4 and 2 kappa_i + delta >= 1)");

    double h = 0.02;
    for (int refine = 0;; ++refine) {
      build(h);
      if (validate()) break;
      if (refine >= 3)
        throw std::logic_error("dsmc: strip rate table failed to reach interpolation accuracy");
      h *= 0.5;
    }
    w_star_ = *std::max_element(log_values_.begin(), log_values_.end());
    w_star_ = std::exp(w_star_);
    for (double z : {z_max_ + 5.0, z_max_ + 25.0, -(z_max_ + 5.0), -(z_max_ + 25.0)})
      w_star_ = std::max(w_star_, direct(z));
    w_star_ *= 1.0 + 1e-3;
  }

  double eps() const { return eps_; }
  double w_star() const { return w_star_; }

  double operator()(double z0) const {
    const double u = (z0 - z_min_) * inv_h_;
    const auto k = static_cast<long>(std::floor(u));
    if (k < 1 || k + 2 >= static_cast<long>(log_values_.size())) return direct(z0);
    const double t = u - static_cast<double>(k);
    const double f0 = log_values_[k - 1], f1 = log_values_[k], f2 = log_values_[k + 1],
                 f3 = log_values_[k + 2];
    const double interp =
        f1 + 0.5 * t *
                 (f2 - f0 +
                  t * (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3 + t * (3.0 * (f1 - f2) + f3 - f0)));
    return std::exp(interp);
  }

  double direct(double z0) const {
    const GaussRule& rule = gauss_legendre(32);
    const int panels = std::max(1, static_cast<int>(std::ceil(eps_)));
    const double width = 2.0 * eps_ / panels;
    double strip = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double a0 = z0 - eps_ + p * width;
      const double c = a0 + 0.5 * width, hh = 0.5 * width;
      double sum = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double z = c + hh * rule.nodes[i];
        sum += rule.weights[i] * std::exp(a_ * log_logistic(z) + b_ * log_logistic(-z));
      }
      strip += sum * hh;
    }
    return std::exp(pre_l_ * log_logistic(z0) + pre_r_ * log_logistic(-z0)) * strip;
  }

 private:
  void build(double h) {
    z_min_ = -46.0;
    z_max_ = 46.0;
    inv_h_ = 1.0 / h;
    const auto count = static_cast<std::size_t>(std::floor((z_max_ - z_min_) * inv_h_)) + 1;
    log_values_.resize(count);
    for (std::size_t k = 0; k < count; ++k)
      log_values_[k] = std::log(direct(z_min_ + h * static_cast<double>(k)));
  }

  bool validate() const {
    // Off-grid agreement between the interpolant and direct evaluation.
    for (int k = 0; k < 160; ++k) {
      const double z = z_min_ + 2.0 + (z_max_ - z_min_ - 4.0) * (k + 0.37) / 160.0;
      const double vi = (*this)(z);
      const double vd = direct(z);
      if (std::abs(vi - vd) > 5e-7 * std::abs(vd)) return false;
    }
    return true;
  }

  double eps_, a_, b_, pre_l_, pre_r_;
  double z_min_ = 0.0, z_max_ = 0.0, inv_h_ = 0.0;
  std::vector<double> log_values_;
  double w_star_ = 0.0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Simulator
// ---------------------------------------------------------------------------

struct Simulator::Impl {
  static constexpr int kClassMin = -900;
  static constexpr int kClassMax = 500;
  static constexpr int kClassCount = kClassMax - kClassMin + 1;

  Ensemble ens;
  DsmcOptions opt;
  StripRateTable table;
  double rate_K;     // C_B delta / (2 eps)
  double rate_p;     // gamma + 2 kappa_k + 2 kappa_i - 1/2
  double kappa_h;    // K w* 2^(p-1): h_i = kappa_h e_i^p
  double inv_log2_scale;  // p / ln 2, for class indexing

  std::vector<double> e;            // particle energies
  std::vector<int> cls;             // class per particle
  std::vector<std::uint32_t> pos;   // position inside the class bucket
  std::vector<std::vector<std::uint32_t>> buckets;
  std::vector<double> pow2;         // 2^(c+1) per class slot
  double sum_pow2 = 0.0;            // sum over particles of 2^(c_i+1)
  int c_lo = kClassMax, c_hi = kClassMin;

  CollisionStats stats;
  double rate_estimate = 0.0;  // per-particle collision rate (EWMA)

  struct JournalEntry {
    std::uint32_t i, j;
    Particle pi, pj;
  };
  std::vector<JournalEntry> journal;

  explicit Impl(Ensemble ensemble, DsmcOptions options)
      : ens(std::move(ensemble)), opt(options), table(ens.model()) {
    const GasModel& model = ens.model();
    model.validate();
    rate_K = model.C_B * model.delta / (2.0 * model.epsilon);
    rate_p = model.gamma + 2.0 * model.kappa_k + 2.0 * model.kappa_i - 0.5;
    if (!(rate_p >= 1.0))
      throw std::invalid_argument(
          "dsmc: requires gamma + 2 kappa_k + 2 kappa_i - 1/2 >= 1 for the pair majorant");
    kappa_h = rate_K * table.w_star() * std::pow(2.0, rate_p - 1.0);
    inv_log2_scale = rate_p / std::log(2.0);

    pow2.resize(kClassCount);
    for (int c = kClassMin; c <= kClassMax; ++c) pow2[c - kClassMin] = std::ldexp(1.0, c + 1);
    buckets.resize(kClassCount);
    rebuild_classes();
    validate_fast_path();
  }

  int class_index(double energy) const {
    if (!(energy > 0.0)) return kClassMin;
    const double c = std::floor(inv_log2_scale * std::log(energy));
    if (c < kClassMin) return kClassMin;
    if (c > kClassMax)
      throw Error("dsmc: particle energy outside the supported majorant range");
    return static_cast<int>(c);
  }

  void rebuild_classes() {
    const auto particles = ens.particles();
    const double m = ens.model().m;
    const std::size_t n = particles.size();
    e.resize(n);
    cls.resize(n);
    pos.resize(n);
    for (auto& b : buckets) b.clear();
    c_lo = kClassMax;
    c_hi = kClassMin;
    sum_pow2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = particle_energy(particles[i], m);
      const int c = class_index(e[i]);
      cls[i] = c;
      auto& b = buckets[c - kClassMin];
      pos[i] = static_cast<std::uint32_t>(b.size());
      b.push_back(static_cast<std::uint32_t>(i));
      sum_pow2 += pow2[c - kClassMin];
      c_lo = std::min(c_lo, c);
      c_hi = std::max(c_hi, c);
    }
  }

  void refresh_sums() {
    sum_pow2 = 0.0;
    int lo = kClassMax, hi = kClassMin;
    for (int c = kClassMin; c <= kClassMax; ++c) {
      const auto& b = buckets[c - kClassMin];
      if (b.empty()) continue;
      sum_pow2 += static_cast<double>(b.size()) * pow2[c - kClassMin];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    c_lo = lo;
    c_hi = hi;
  }

  void move_class(std::uint32_t idx, int c_new) {
    const int c_old = cls[idx];
    if (c_new == c_old) return;
    auto& b_old = buckets[c_old - kClassMin];
    const std::uint32_t p = pos[idx];
    const std::uint32_t moved = b_old.back();
    b_old[p] = moved;
    pos[moved] = p;
    b_old.pop_back();
    auto& b_new = buckets[c_new - kClassMin];
    pos[idx] = static_cast<std::uint32_t>(b_new.size());
    b_new.push_back(idx);
    cls[idx] = c_new;
    sum_pow2 += pow2[c_new - kClassMin] - pow2[c_old - kClassMin];
    c_lo = std::min(c_lo, c_new);
    c_hi = std::max(c_hi, c_new);
  }

  // Pair rate fast path; zero for degenerate configurations.
  double pair_rate(const Particle& a, const Particle& b) const {
    const GasModel& model = ens.model();
    const double E_k = 0.25 * model.m * norm2(a.v - b.v);
    const double E_i = a.I + b.I;
    if (!(E_k > 0.0) || !(E_i > 0.0)) return 0.0;
    const double E = E_k + E_i;
    return rate_K * std::pow(E, rate_p) * table(std::log(E_k / E_i));
  }

  std::uint32_t sample_first_index(Rng& rng) const {
    double target = rng.uniform() * sum_pow2;
    const std::vector<std::uint32_t>* last = nullptr;
    for (int c = c_hi; c >= c_lo; --c) {
      const auto& b = buckets[c - kClassMin];
      if (b.empty()) continue;
      last = &b;
      const double wgt = static_cast<double>(b.size()) * pow2[c - kClassMin];
      if (target < wgt) return b[rng.uniform_index(b.size())];
      target -= wgt;
    }
    // Rounding fallthrough: take the lowest populated class seen.
    return (*last)[rng.uniform_index(last->size())];
  }

  std::size_t run_window(double dt, CollisionStats& local) {
    Rng& rng = ens.rng();
    auto particles = ens.particles();
    const GasModel& model = ens.model();
    const double m = ens.model().m;
    const std::size_t n = particles.size();
    const double pair_weight = ens.n_eff() * static_cast<double>(n - 1);
    std::size_t accepted = 0;
    double t_local = 0.0;
    for (;;) {
      const double lambda = pair_weight * kappa_h * sum_pow2;
      if (!(lambda > 0.0)) break;
      t_local += rng.exponential() / lambda;
      if (t_local > dt) break;
      ++local.candidates;

      const std::uint32_t i = sample_first_index(rng);
      std::uint32_t j = static_cast<std::uint32_t>(rng.uniform_index(n));
      while (j == i) j = static_cast<std::uint32_t>(rng.uniform_index(n));

      const Particle& pi = particles[i];
      const Particle& pj = particles[j];
      const double E_k = 0.25 * m * norm2(pi.v - pj.v);
      const double E_i = pi.I + pj.I;
      if (!(E_k > 0.0) || !(E_i > 0.0)) {
        ++local.degenerate_skips;
        continue;
      }
      const double E = E_k + E_i;
      const double z0 = std::log(E_k / E_i);
      const double nu = rate_K * std::pow(E, rate_p) * table(z0);
      const double nu_hat = kappa_h * (pow2[cls[i] - kClassMin] + pow2[cls[j] - kClassMin]);
      if (nu > nu_hat) return rollback();
      if (rng.uniform() * nu_hat >= nu) continue;

      // Accepted: redistribute energy within the strip.
      EnergySplit split{E, E_k, E_i, E_k / E};
      const PostCollisionSample post = sample_post_collision_energies(split, model, rng);
      const double E_i_prime = post.I_prime + post.I_star_prime;
      journal.push_back({i, j, pi, pj});
      auto [v1, v2] = post_collision_velocities(pi.v, pj.v, E, E_i_prime, post.sigma, m);

      if (opt.check_conservation) audit_collision(pi, pj, v1, v2, post, E, local);
      const double R_new = 1.0 - E_i_prime / E;
      if (R_new > 0.0 && R_new < 1.0) {
        (std::log(R_new / (1.0 - R_new)) - z0) >= 0.0 ? ++local.delta_eta_pos
                                                      : ++local.delta_eta_neg;
        if (std::abs(std::log(R_new / (1.0 - R_new)) - z0) > model.epsilon * (1.0 + 1e-12))
          ++local.support_violations;
      }

      particles[i].v = v1;
      particles[i].I = post.I_prime;
      particles[j].v = v2;
      particles[j].I = post.I_star_prime;
      e[i] = particle_energy(particles[i], m);
      e[j] = particle_energy(particles[j], m);
      move_class(i, class_index(e[i]));
      move_class(j, class_index(e[j]));
      ++accepted;
    }
    local.accepted += accepted;
    return accepted;
  }

  void audit_collision(const Particle& pi, const Particle& pj, const Vec3& v1, const Vec3& v2,
                       const PostCollisionSample& post, double E, CollisionStats& local) {
    const double m = ens.model().m;
    const Vec3 dp = m * (v1 + v2 - pi.v - pj.v);
    const double mom_err = std::max({std::abs(dp.x), std::abs(dp.y), std::abs(dp.z)});
    const double e_pre = 0.5 * m * (norm2(pi.v) + norm2(pj.v)) + pi.I + pj.I;
    const double e_post = 0.5 * m * (norm2(v1) + norm2(v2)) + post.I_prime + post.I_star_prime;
    const double en_err = std::abs(e_post - e_pre) / std::max(E, 1e-300);
    local.max_momentum_error = std::max(local.max_momentum_error, mom_err);
    local.max_energy_error = std::max(local.max_energy_error, en_err);
    if (mom_err > 1e-12 || en_err > 1e-12) ++local.conservation_violations;
  }

  std::size_t rollback() {
    auto particles = ens.particles();
    for (auto it = journal.rbegin(); it != journal.rend(); ++it) {
      particles[it->i] = it->pi;
      particles[it->j] = it->pj;
    }
    journal.clear();
    rebuild_classes();
    return kRolledBack;
  }

  static constexpr std::size_t kRolledBack = static_cast<std::size_t>(-1);

  std::size_t step(double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("Simulator::step: dt must be > 0");
    for (int retry = 0; retry <= opt.max_majorant_retries; ++retry) {
      journal.clear();
      refresh_sums();
      CollisionStats local;
      const std::size_t accepted = run_window(dt, local);
      if (accepted == kRolledBack) {
        kappa_h *= 2.0;
        ++stats.majorant_retries;
        continue;
      }
      merge_stats(local);
      journal.clear();
      ens.advance_time(dt);
      const double n = static_cast<double>(ens.particles().size());
      const double inst = 2.0 * static_cast<double>(accepted) / (n * dt);
      rate_estimate = rate_estimate > 0.0 ? 0.7 * rate_estimate + 0.3 * inst : inst;
      return accepted;
    }
    throw MajorantOverflowError("Simulator::step: majorant kept overflowing after retries");
  }

  void merge_stats(const CollisionStats& local) {
    stats.candidates += local.candidates;
    stats.accepted += local.accepted;
    stats.degenerate_skips += local.degenerate_skips;
    stats.conservation_violations += local.conservation_violations;
    stats.max_momentum_error = std::max(stats.max_momentum_error, local.max_momentum_error);
    stats.max_energy_error = std::max(stats.max_energy_error, local.max_energy_error);
    stats.delta_eta_pos += local.delta_eta_pos;
    stats.delta_eta_neg += local.delta_eta_neg;
    stats.support_violations += local.support_violations;
  }

  double probe_rate() {
    // Mean pair rate over a deterministic probe sample.
    Rng& rng = ens.rng();
    const auto particles = ens.particles();
    const std::size_t n = particles.size();
    const std::size_t probes = std::min<std::size_t>(1024, n * (n - 1) / 2);
    double sum = 0.0;
    for (std::size_t k = 0; k < probes; ++k) {
      const std::uint32_t i = static_cast<std::uint32_t>(rng.uniform_index(n));
      std::uint32_t j = static_cast<std::uint32_t>(rng.uniform_index(n));
      while (j == i) j = static_cast<std::uint32_t>(rng.uniform_index(n));
      sum += pair_rate(particles[i], particles[j]);
    }
    return ens.n_eff() * static_cast<double>(n - 1) * sum / static_cast<double>(probes);
  }

  void validate_fast_path() {
    // The tabulated rate must agree with full adaptive quadrature.
    const GasModel& model = ens.model();
    Rng check(0x51a9e, 7);
    for (int k = 0; k < 12; ++k) {
      const double E_k = std::exp(check.uniform(-8.0, 8.0));
      const double E_i = std::exp(check.uniform(-8.0, 8.0));
      const double z0 = std::log(E_k / E_i);
      const double E = E_k + E_i;
      const double fast = rate_K * std::pow(E, rate_p) * table(z0);
      Vec3 v{std::sqrt(4.0 * E_k / model.m), 0.0, 0.0};
      const double slow = pair_collision_rate(v, Vec3{}, 0.5 * E_i, 0.5 * E_i, model);
      if (std::abs(fast - slow) > 1e-6 * std::abs(slow))
        throw std::logic_error("dsmc: fast rate path disagrees with adaptive quadrature");
    }
  }
};

Simulator::Simulator(Ensemble ensemble, DsmcOptions options)
    : impl_(std::make_unique<Impl>(std::move(ensemble), options)) {}
Simulator::~Simulator() = default;
Simulator::Simulator(Simulator&&) noexcept = default;
Simulator& Simulator::operator=(Simulator&&) noexcept = default;

std::size_t Simulator::step(double dt) { return impl_->step(dt); }
const Ensemble& Simulator::ensemble() const { return impl_->ens; }
Moments Simulator::moments() const { return impl_->ens.moments(); }
const CollisionStats& Simulator::stats() const { return impl_->stats; }
double Simulator::collision_rate_estimate() const {
  return impl_->rate_estimate > 0.0 ? impl_->rate_estimate : impl_->probe_rate();
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

TemperatureSeries run_simulation(const SimulationConfig& config, const SnapshotCallback& on_snapshot,
                                 CollisionStats* stats_out) {
  if (config.output_points < 2)
    throw std::invalid_argument("run_simulation: output_points must be >= 2");
  if (!(config.t_end > 0.0)) throw std::invalid_argument("run_simulation: t_end must be > 0");

  Ensemble ens =
      Ensemble::sample(config.initial, config.particles, config.model, config.seed, config.stream);
  Simulator sim(std::move(ens), config.dsmc);

  TemperatureSeries series;
  series.times.resize(config.output_points);
  for (std::size_t k = 0; k + 1 < config.output_points; ++k)
    series.times[k] =
        config.t_end * static_cast<double>(k) / static_cast<double>(config.output_points - 1);
  series.times.back() = config.t_end;

  const Moments m0 = sim.moments();
  series.T_eq = equilibrium_temperature(m0.T_k, m0.T_i, config.model.delta);
  series.T_k.push_back(m0.T_k);
  series.T_i.push_back(m0.T_i);
  if (on_snapshot) on_snapshot(0.0, sim.ensemble());

  double rate = sim.collision_rate_estimate();
  const double frac = config.dsmc.step_collision_fraction;
  for (std::size_t k = 1; k < config.output_points; ++k) {
    const double t_target = series.times[k];
    while (sim.ensemble().time() < t_target) {
      const double remaining = t_target - sim.ensemble().time();
      double dt = remaining;
      if (rate > 0.0) dt = std::min(dt, frac / rate);
      sim.step(dt);
      const double estimate = sim.collision_rate_estimate();
      if (estimate > 0.0) rate = estimate;
    }
    const Moments mk = sim.moments();
    series.T_k.push_back(mk.T_k);
    series.T_i.push_back(mk.T_i);
    if (on_snapshot) on_snapshot(t_target, sim.ensemble());
  }
  if (stats_out) *stats_out = sim.stats();
  return series;
}

}  // namespace qrgas
