#include "shc/asymptotics.hpp"

#include "shc/errors.hpp"
#include "shc/rng.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace shc {
namespace {

constexpr double kInvE = 0.36787944117144233;  // exp(-1)

double inverse_stable_index(const LaplaceExponent& phi, const char* what) {
  const double beta = phi.index_at_infinity();
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError(std::string(what) +
                      ": phi must be regularly varying at infinity with index in (0, 1)");
  }
  return beta;
}

double log_moment_asymptote(double beta, double t) {
  const double phi_inv_t = std::pow(t, -beta);
  return std::log(phi_inv_t) / (phi_inv_t * std::tgamma(1.0 + beta));
}

}  // namespace

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::subcritical: return "subcritical";
    case Regime::critical: return "critical";
    case Regime::supercritical: return "supercritical";
  }
  return "unknown";
}

RegimeTag RegimeTag::of(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("regime: alpha must lie in (0, 2)");
  }
  if (alpha == 1.0) return {alpha, Regime::critical};
  return {alpha, alpha > 1.0 ? Regime::supercritical : Regime::subcritical};
}

double f_alpha_eval(double alpha, double t) {
  const auto tag = RegimeTag::of(alpha);
  if (!(t > 0.0)) throw DomainError("f_alpha: t must be positive");
  switch (tag.regime) {
    case Regime::supercritical: return std::pow(t, 1.0 / alpha);
    case Regime::critical:
      if (!(t < 1.0)) throw DomainError("f_alpha: alpha = 1 needs t in (0, 1)");
      return t * std::log(1.0 / t);
    case Regime::subcritical: return t;
  }
  return 0.0;
}

double jump_kernel_constant(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("jump_kernel_constant: alpha must lie in (0, 2)");
  }
  return alpha * std::pow(2.0, alpha - 1.0) * std::tgamma(0.5 * (1.0 + alpha)) /
         (std::sqrt(std::numbers::pi) * std::tgamma(1.0 - 0.5 * alpha));
}

double frac_perimeter_interval(double alpha, double length) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("frac_perimeter_interval: alpha must lie in (0, 1)");
  }
  if (!(length > 0.0)) throw DomainError("frac_perimeter_interval: L must be positive");
  return jump_kernel_constant(alpha) * 2.0 * std::pow(length, 1.0 - alpha) /
         (alpha * (1.0 - alpha));
}

QuadratureValue frac_perimeter_numeric(const IntervalDomain& domain, double alpha,
                                       std::size_t max_levels) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("frac_perimeter_numeric: alpha must lie in (0, 1)");
  }
  const double c = jump_kernel_constant(alpha);
  const double length = domain.length();
  // Symmetric about the midpoint: integrate the left half twice; there the
  // distance to the left end is the integration variable itself.
  auto inner = [&](double x) {
    return c / alpha * (std::pow(x, -alpha) + std::pow(length - x, -alpha));
  };
  boost::math::quadrature::tanh_sinh<double> rule(max_levels);
  double error = 0.0;
  const double half = rule.integrate(inner, 0.0, 0.5 * length, 1e-14, &error);
  return {2.0 * half, 2.0 * error};
}

double c_alpha_eval(const RegimeTag& regime, const GeometryInput& geometry,
                    std::optional<double> sup_constant) {
  switch (regime.regime) {
    case Regime::supercritical:
      if (!sup_constant) {
        throw DomainError("c_alpha: supercritical regime needs E[sup Z_1]");
      }
      return *sup_constant * geometry.perimeter;
    case Regime::critical:
      return geometry.perimeter / std::numbers::pi;
    case Regime::subcritical:
      if (geometry.frac_perimeter) return *geometry.frac_perimeter;
      if (geometry.dimension != 1) {
        throw DomainError("c_alpha: Per_alpha must be supplied for d >= 2");
      }
      return frac_perimeter_interval(regime.alpha, geometry.volume);
  }
  return 0.0;
}

SeriesValue large_time_constant(const EigenSystem& eig, double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw DomainError("large_time_constant: beta must lie in [0, 1)");
  }
  const double gamma = std::tgamma(1.0 - beta);
  double sum = 0.0;
  for (const auto& p : eig.pairs()) sum += p.mass_sq / p.lambda;
  SeriesValue out;
  out.value = sum / gamma;
  out.tail_bound = eig.missing_mass() / (eig.lambda_max() * gamma);
  out.terms_used = eig.size();
  return out;
}

double large_time_asymptote(const EigenSystem& eig, const LaplaceExponent& phi,
                            double t) {
  if (!(t > 0.0)) throw DomainError("large_time_asymptote: t must be positive");
  return phi(1.0 / t) * large_time_constant(eig, phi.index_at_zero()).value;
}

double subordinate_log_rate(const LaplaceExponent& phi, double lambda1) {
  if (!(lambda1 > 0.0)) throw DomainError("subordinate_log_rate: lambda1 must be positive");
  return -phi(lambda1);
}

double small_time_asymptote(double alpha, const LaplaceExponent& phi,
                            const GeometryInput& geometry, double t,
                            std::optional<double> sup_constant) {
  const auto tag = RegimeTag::of(alpha);
  const double beta = inverse_stable_index(phi, "small_time_asymptote");
  if (!(t > 0.0)) throw DomainError("small_time_asymptote: t must be positive");
  const double scale = phi(1.0 / t);
  const double c = c_alpha_eval(tag, geometry, sup_constant);
  switch (tag.regime) {
    case Regime::supercritical:
      return c * std::tgamma(1.0 + 1.0 / alpha) / std::tgamma(1.0 + beta / alpha) *
             std::pow(scale, -1.0 / alpha);
    case Regime::critical:
      if (!(scale > 1.0)) {
        throw DomainError("small_time_asymptote: alpha = 1 needs phi(1/t) > 1");
      }
      return c / std::tgamma(1.0 + beta) * std::log(scale) / scale;
    case Regime::subcritical:
      return c / std::tgamma(1.0 + beta) / scale;
  }
  return 0.0;
}

double moment_asymptote(double p, const LaplaceExponent& phi, double t) {
  if (!(p > 0.0)) throw DomainError("moment_asymptote: p must be positive");
  if (!(t > 0.0)) throw DomainError("moment_asymptote: t must be positive");
  const double beta = inverse_stable_index(phi, "moment_asymptote");
  return std::tgamma(p + 1.0) / std::tgamma(p * beta + 1.0) *
         std::pow(phi(1.0 / t), -p);
}

double v_monotone(double x) {
  if (!(x > 0.0)) throw DomainError("v_monotone: x must be positive");
  return x <= kInvE ? x * std::log(1.0 / x) : kInvE;
}

LogMomentEstimate expected_v(double beta, double t) {
  FunctionalOptions options;
  options.breakpoints = {kInvE};
  const auto est = expected_functional(beta, t, v_monotone, options);
  return {est.value, est.error, log_moment_asymptote(beta, t)};
}

LogMomentEstimate expected_xlog(double beta, double t) {
  FunctionalOptions options;
  options.breakpoints = {1.0};
  const auto est = expected_functional(
      beta, t, [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }, options);
  return {est.value, est.error, log_moment_asymptote(beta, t)};
}

TailProbeResult tail_decay_probe(double beta, std::span<const double> deltas,
                                 std::span<const double> t_grid, long n_samples,
                                 std::uint64_t seed) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("tail_decay_probe: beta must lie in (0, 1)");
  }
  if (deltas.empty() || t_grid.size() < 2) {
    throw DomainError("tail_decay_probe: need deltas and at least two t values");
  }
  if (n_samples < 2) throw DomainError("tail_decay_probe: need n_samples >= 2");

  // Kanter angles shared by every (t, delta): common random numbers.
  Rng rng(derive_seed(seed, stream::kProbe));
  std::vector<double> a_values(static_cast<std::size_t>(n_samples));
  for (auto& a : a_values) {
    const double u = std::numbers::pi * rng.uniform_open();
    a = zolotarev_a(beta, u, std::numbers::pi - u);
  }
  const double exponent = -beta / (1.0 - beta);

  TailProbeResult result;
  result.expected_slope = exponent;
  for (double delta : deltas) {
    if (!(delta > 0.0)) throw DomainError("tail_decay_probe: deltas must be positive");
    std::vector<double> ts, minus_log_p;
    for (double t : t_grid) {
      if (!(t > 0.0)) throw DomainError("tail_decay_probe: t values must be positive");
      // P(D_1 < x | U) = exp(-A(U) x^{-beta/(1-beta)}), x = t delta^{-1/beta}.
      const double x = t * std::pow(delta, -1.0 / beta);
      const double s = std::pow(x, exponent);
      double top = -std::numeric_limits<double>::infinity();
      for (double a : a_values) top = std::max(top, -a * s);
      double sum = 0.0, sum_sq = 0.0;
      for (double a : a_values) {
        const double e = std::exp(-a * s - top);
        sum += e;
        sum_sq += e * e;
      }
      const double n = static_cast<double>(n_samples);
      const double mean = sum / n;
      if (!(mean > 0.0)) throw NumericalError("tail_decay_probe: unresolved tail");
      const double var = std::max(0.0, sum_sq / n - mean * mean);
      const double log_p = top + std::log(mean);
      result.points.push_back(
          {t, delta, std::exp(log_p), log_p, std::sqrt(var / n) / mean});
      if (!(log_p < 0.0)) {
        throw NumericalError("tail_decay_probe: tail probability not below 1");
      }
      ts.push_back(t);
      minus_log_p.push_back(-log_p);
    }
    result.fits.push_back({delta, fit_loglog(ts, minus_log_p)});
  }
  double total = 0.0;
  for (const auto& f : result.fits) total += f.fit.slope;
  result.slope = total / static_cast<double>(result.fits.size());
  return result;
}

}  // namespace shc
