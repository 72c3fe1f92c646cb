#pragma once

#include "shc/rng.hpp"

#include <cstdint>

namespace shc {

/// Index of a one-dimensional symmetric stable process with
/// E[exp(i xi Y_t)] = exp(-t |xi|^alpha); alpha = 2 is Brownian motion with
/// Var Y_t = 2t.
class StableSpec {
 public:
  /// Throws DomainError unless alpha lies in (0, 2].
  explicit StableSpec(double alpha);

  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Symmetric variate with characteristic function exp(-|xi|^alpha)
/// (Chambers-Mallows-Stuck; Gaussian with variance 2 at alpha = 2).
double sample_symmetric_stable(const StableSpec& spec, Rng& rng);

/// Increment over a time step dt: dt^{1/alpha} times the unit variate.
double sample_increment(const StableSpec& spec, double dt, Rng& rng);
double sample_increment(const StableSpec& spec, double dt, std::uint64_t seed);

struct Interval {
  double lower;
  double upper;
};

struct ExitResult {
  bool exited = false;
  /// Time of the first grid step found outside (a, b); t_max if none.
  double tau = 0.0;
};

/// Fixed-step Euler walk from x0 until the state leaves (a, b) or t_max is
/// reached; the final step is shortened to land exactly on t_max. A jump that
/// lands outside counts as an exit. Requires x0 in (a, b) and dt > 0.
///
/// Crossings inside a step are not detected, so tau is biased upward
/// (O(sqrt(dt)) at alpha = 2, milder for alpha < 2).
ExitResult simulate_exit(const StableSpec& spec, Interval domain, double x0,
                         double dt, double t_max, Rng& rng);
ExitResult simulate_exit(const StableSpec& spec, Interval domain, double x0,
                         double dt, double t_max, std::uint64_t seed);

struct SupConstantEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  /// Half-width of the 95% normal confidence interval.
  double ci_half_width = 0.0;
};

/// Monte Carlo estimate of E[sup_{s<=1} Z_s] from n_paths walks with n_steps
/// steps each. The grid maximum underestimates the supremum, so the
/// estimate is biased downward and the bias shrinks as n_steps grows.
/// Defined for alpha in (1, 2]; alpha = 2 is a calibration case.
SupConstantEstimate estimate_sup_constant(double alpha, long n_paths,
                                          long n_steps, std::uint64_t seed,
                                          unsigned workers = 1);

/// Closed form of the same constant: alpha * Gamma(1 - 1/alpha) / pi, from
/// Spitzer's identity E[sup_{s<=1} Z_s] = int_0^1 E[Z_s^+] ds / s and
/// E|Z_1| = (2/pi) Gamma(1 - 1/alpha). Requires alpha in (1, 2].
double sup_constant_exact(double alpha);

}  // namespace shc
