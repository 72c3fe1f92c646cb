#include "shc/heat_content.hpp"

#include "shc/errors.hpp"
#include "shc/parallel.hpp"
#include "shc/stable_motion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace shc {
namespace {

SeriesTolerance tolerance_of(const SeriesOptions& options) {
  return {options.tolerance, options.relative_tolerance};
}

void require_positive_t(double t, const char* what) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError(std::string(what) + ": t must be positive and finite");
  }
}

void require_series_range(const EigenSystem& eig, double t,
                          const SeriesOptions& options, const char* what) {
  const double t_min = series_t_min(eig, options.tolerance);
  if (t < t_min) {
    std::ostringstream os;
    os << what << ": t = " << t << " below series cutoff " << t_min
       << " for " << eig.size() << " eigenpairs; use Monte Carlo";
    throw TruncationError(os.str());
  }
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::series: return "series";
    case Method::transform: return "transform";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

double series_t_min(const EigenSystem& eig, double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("series_t_min: tolerance must be positive");
  return std::max(0.0, std::log(eig.total_mass() / tolerance)) / eig.lambda_max();
}

HeatContentValue q_stable(const EigenSystem& eig, double t,
                          const SeriesOptions& options) {
  require_positive_t(t, "q_stable");
  require_series_range(eig, t, options, "q_stable");
  const auto s = weighted_series(
      eig, [t](double lambda) { return std::exp(-lambda * t); },
      tolerance_of(options));
  return {t, s.value, Method::series, s.tail_bound};
}

HeatContentValue q_subordinate(const EigenSystem& eig, const LaplaceExponent& phi,
                               double t, const SeriesOptions& options) {
  require_positive_t(t, "q_subordinate");
  const auto s = weighted_series(
      eig, [&](double lambda) { return std::exp(-t * phi(lambda)); },
      tolerance_of(options));
  return {t, s.value, Method::series, s.tail_bound};
}

HeatContentValue q_time_changed(const EigenSystem& eig, const LaplaceExponent& phi,
                                double t, const SeriesOptions& options) {
  require_positive_t(t, "q_time_changed");
  const bool closed_form =
      phi.is_stable() || std::holds_alternative<Drift>(phi.variant());
  const auto s = weighted_series(
      eig,
      [&](double lambda) {
        return std::min(1.0, expected_laplace(phi, lambda, t, options.inversion));
      },
      tolerance_of(options));
  return {t, s.value, closed_form ? Method::series : Method::transform,
          s.tail_bound};
}

HeatContentValue q_monte_carlo(double alpha, const IntervalDomain& domain,
                               const TimeChange& time_change, double t,
                               const MonteCarloOptions& options) {
  const StableSpec spec(alpha);
  if (options.n_paths < 1) throw DomainError("q_monte_carlo: need n_paths >= 1");
  if (!(options.dt > 0.0)) throw DomainError("q_monte_carlo: dt must be positive");
  if (options.steps_per_path && *options.steps_per_path < 1) {
    throw DomainError("q_monte_carlo: steps_per_path must be >= 1");
  }
  if (!(t >= 0.0)) throw DomainError("q_monte_carlo: t must be >= 0");
  if (time_change.kind != TimeChange::Kind::none && !time_change.phi) {
    throw DomainError("q_monte_carlo: time change needs a Laplace exponent");
  }
  const double volume = domain.volume();
  if (t == 0.0) return {t, volume, Method::monte_carlo, 0.0};

  const Interval interval{domain.lower(), domain.upper()};
  constexpr long kChunk = 1000;
  const long n_chunks = (options.n_paths + kChunk - 1) / kChunk;
  std::vector<long> survivors(static_cast<std::size_t>(n_chunks), 0);

  auto time_argument = [&](Rng& rng, std::uint64_t path_seed) -> double {
    switch (time_change.kind) {
      case TimeChange::Kind::none:
        return t;
      case TimeChange::Kind::subordinator:
        return sample_subordinator_at(*time_change.phi, t, rng);
      case TimeChange::Kind::inverse: {
        const auto& phi = *time_change.phi;
        if (const auto* s = std::get_if<Stable>(&phi.variant())) {
          return sample_inverse_stable_exact(s->beta, t, rng);
        }
        if (std::holds_alternative<Drift>(phi.variant())) return t;
        const auto path = sample_path(phi, t, options.path_delta_u, path_seed);
        return inverse_at(path, t).value;
      }
    }
    return t;
  };

  parallel_for(survivors.size(), options.workers, [&](std::size_t chunk) {
    Rng rng(derive_seed(options.seed, stream::kChunk, chunk));
    const long begin = static_cast<long>(chunk) * kChunk;
    const long end = std::min(options.n_paths, begin + kChunk);
    long alive = 0;
    for (long i = begin; i < end; ++i) {
      const double x0 = rng.uniform(interval.lower, interval.upper);
      const double duration = time_argument(
          rng, derive_seed(options.seed, stream::kPath, static_cast<std::uint64_t>(i)));
      if (duration <= 0.0) {
        ++alive;
        continue;
      }
      const double step = options.steps_per_path
                              ? duration / static_cast<double>(*options.steps_per_path)
                              : options.dt;
      if (!simulate_exit(spec, interval, x0, step, duration, rng).exited) ++alive;
    }
    survivors[chunk] = alive;
  });

  long alive = 0;
  for (long s : survivors) alive += s;
  const double n = static_cast<double>(options.n_paths);
  const double p = static_cast<double>(alive) / n;
  const double half_width = 1.96 * volume * std::sqrt(p * (1.0 - p) / n);
  return {t, volume * p, Method::monte_carlo, half_width};
}

}  // namespace shc
