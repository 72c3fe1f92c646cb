#pragma once

#include "shc/laplace_inversion.hpp"
#include "shc/spectral.hpp"
#include "shc/subordinator.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace shc {

enum class Method { series, transform, monte_carlo };

std::string_view to_string(Method m) noexcept;

/// A spectral heat content value at time t with its error bound: the tail
/// certificate for series/transform values, the 95% CI half-width for
/// Monte Carlo values.
struct HeatContentValue {
  double t = 0.0;
  double value = 0.0;
  Method method = Method::series;
  double error_bound = 0.0;
};

struct SeriesOptions {
  /// Absolute tail tolerance; also sets the small-t cutoff.
  double tolerance = 1e-12;
  /// Optional relative tail tolerance (against the partial sum).
  double relative_tolerance = 0.0;
  InversionOptions inversion{};
};

/// Smallest t at which a series over `eig` is trusted:
/// ln(|Omega| / tolerance) / lambda_N. Below it the exponential weights at the
/// truncation point are too large for the tail to be negligible.
double series_t_min(const EigenSystem& eig, double tolerance);

/// Q^Y(t) = sum_n exp(-lambda_n t) m_n^2. Throws TruncationError below
/// series_t_min and DomainError for t <= 0.
HeatContentValue q_stable(const EigenSystem& eig, double t,
                          const SeriesOptions& options = {});

/// Q^{Y o D}(t) = sum_n exp(-t phi(lambda_n)) m_n^2 (subordinate killed process).
HeatContentValue q_subordinate(const EigenSystem& eig, const LaplaceExponent& phi,
                               double t, const SeriesOptions& options = {});

/// Q^{Y o E}(t) = sum_n E[exp(-lambda_n E_t)] m_n^2. Stable exponents use the
/// Mittag-Leffler weight (method series); others invert the transform per
/// term (method transform). Only terms needed for the tail certificate are
/// evaluated.
HeatContentValue q_time_changed(const EigenSystem& eig, const LaplaceExponent& phi,
                                double t, const SeriesOptions& options = {});

/// Time change applied in the Monte Carlo estimator.
struct TimeChange {
  enum class Kind { none, subordinator, inverse };
  Kind kind = Kind::none;
  std::optional<LaplaceExponent> phi;

  static TimeChange none() { return {}; }
  static TimeChange subordinator(LaplaceExponent p) { return {Kind::subordinator, p}; }
  static TimeChange inverse(LaplaceExponent p) { return {Kind::inverse, p}; }
};

struct MonteCarloOptions {
  long n_paths = 10'000;
  /// Euler step of the exit walk.
  double dt = 1e-3;
  /// When set, every walk uses this many equal steps over its own (random)
  /// duration instead of the fixed dt.
  std::optional<long> steps_per_path;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  /// Grid step for first-passage sampling of non-stable inverse time changes.
  double path_delta_u = 1e-4;
};

/// Monte Carlo estimate of int_Omega P_x(tau > T) dx with T = t, D_t or E_t.
///
/// Starting points are uniform on the interval. D_t is drawn directly at time
/// t; E_t uses the exact self-similar sampler for stable exponents, the
/// identity for the drift double, and first passage on a sampled path
/// otherwise. Returns |Omega| times the survival fraction with a 95% CI.
/// Paths are processed in fixed chunks with derived seeds, so the result does
/// not depend on options.workers.
HeatContentValue q_monte_carlo(double alpha, const IntervalDomain& domain,
                               const TimeChange& time_change, double t,
                               const MonteCarloOptions& options);

}  // namespace shc
