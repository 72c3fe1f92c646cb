#include "shc/stable_motion.hpp"

#include "shc/errors.hpp"
#include "shc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace shc {
namespace {

// Chambers-Mallows-Stuck with the per-alpha constants hoisted.
class SymmetricStableSampler {
 public:
  explicit SymmetricStableSampler(double alpha)
      : alpha_(alpha),
        inv_alpha_(1.0 / alpha),
        tail_exponent_((1.0 - alpha) / alpha) {}

  double operator()(Rng& rng) const {
    if (alpha_ == 2.0) return std::numbers::sqrt2 * rng.normal();
    const double v = std::numbers::pi * (rng.uniform_open() - 0.5);
    if (alpha_ == 1.0) return std::tan(v);
    const double w = rng.exponential();
    return std::sin(alpha_ * v) * std::pow(std::cos(v), -inv_alpha_) *
           std::pow(std::cos((1.0 - alpha_) * v) / w, tail_exponent_);
  }

  double scale(double dt) const { return std::pow(dt, inv_alpha_); }

 private:
  double alpha_;
  double inv_alpha_;
  double tail_exponent_;
};

}  // namespace

StableSpec::StableSpec(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw DomainError("stable index alpha must lie in (0, 2], got " +
                      std::to_string(alpha));
  }
}

double sample_symmetric_stable(const StableSpec& spec, Rng& rng) {
  return SymmetricStableSampler(spec.alpha())(rng);
}

double sample_increment(const StableSpec& spec, double dt, Rng& rng) {
  if (!(dt > 0.0)) throw DomainError("sample_increment: dt must be positive");
  const SymmetricStableSampler sampler(spec.alpha());
  return sampler.scale(dt) * sampler(rng);
}

double sample_increment(const StableSpec& spec, double dt, std::uint64_t seed) {
  Rng rng(seed);
  return sample_increment(spec, dt, rng);
}

ExitResult simulate_exit(const StableSpec& spec, Interval domain, double x0,
                         double dt, double t_max, Rng& rng) {
  if (!(domain.lower < domain.upper)) {
    throw DomainError("simulate_exit: empty interval");
  }
  if (!(x0 > domain.lower && x0 < domain.upper)) {
    throw DomainError("simulate_exit: x0 must lie inside the interval");
  }
  if (!(dt > 0.0)) throw DomainError("simulate_exit: dt must be positive");
  if (!(t_max >= 0.0)) throw DomainError("simulate_exit: t_max must be >= 0");

  const SymmetricStableSampler sampler(spec.alpha());
  const double full_scale = sampler.scale(dt);
  const long full_steps = static_cast<long>(std::floor(t_max / dt));
  double x = x0;
  double time = 0.0;
  for (long k = 1; k <= full_steps; ++k) {
    x += full_scale * sampler(rng);
    time = static_cast<double>(k) * dt;
    if (x <= domain.lower || x >= domain.upper) return {true, time};
  }
  const double remainder = t_max - time;
  if (remainder > 1e-12 * dt) {
    x += sampler.scale(remainder) * sampler(rng);
    if (x <= domain.lower || x >= domain.upper) return {true, t_max};
  }
  return {false, t_max};
}

ExitResult simulate_exit(const StableSpec& spec, Interval domain, double x0,
                         double dt, double t_max, std::uint64_t seed) {
  Rng rng(seed);
  return simulate_exit(spec, domain, x0, dt, t_max, rng);
}

SupConstantEstimate estimate_sup_constant(double alpha, long n_paths,
                                          long n_steps, std::uint64_t seed,
                                          unsigned workers) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw DomainError("estimate_sup_constant: alpha must lie in (1, 2]");
  }
  if (n_paths < 2 || n_steps < 1) {
    throw DomainError("estimate_sup_constant: need n_paths >= 2 and n_steps >= 1");
  }
  constexpr long kChunk = 1000;
  const long n_chunks = (n_paths + kChunk - 1) / kChunk;
  struct Partial {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(n_chunks));
  const SymmetricStableSampler sampler(alpha);
  const double scale = sampler.scale(1.0 / static_cast<double>(n_steps));

  parallel_for(partials.size(), workers, [&](std::size_t chunk) {
    Rng rng(derive_seed(seed, stream::kChunk, chunk));
    const long begin = static_cast<long>(chunk) * kChunk;
    const long end = std::min(n_paths, begin + kChunk);
    Partial p;
    for (long path = begin; path < end; ++path) {
      double z = 0.0;
      double sup = 0.0;
      for (long k = 0; k < n_steps; ++k) {
        z += scale * sampler(rng);
        sup = std::max(sup, z);
      }
      p.sum += sup;
      p.sum_sq += sup * sup;
    }
    partials[chunk] = p;
  });

  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& p : partials) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const double n = static_cast<double>(n_paths);
  const double mean = sum / n;
  const double variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  const double se = std::sqrt(variance / n);
  return {mean, se, 1.96 * se};
}

double sup_constant_exact(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw DomainError("sup_constant_exact: alpha must lie in (1, 2]");
  }
  return alpha * std::tgamma(1.0 - 1.0 / alpha) / std::numbers::pi;
}

}  // namespace shc
