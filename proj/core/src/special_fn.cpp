#include "shc/special_fn.hpp"

#include "shc/errors.hpp"

#include <boost/math/special_functions/sin_pi.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace shc {
namespace {

constexpr double kSeriesTauMax = 8.0;
constexpr double kAsymptoticTauMin = 50.0;

void check_arguments(double beta, double x) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw DomainError("mittag_leffler: beta must lie in (0, 1], got " +
                      std::to_string(beta));
  }
  if (!(x <= 0.0) || !std::isfinite(x)) {
    throw DomainError("mittag_leffler: x must be finite and <= 0, got " +
                      std::to_string(x));
  }
}

// Neumaier-compensated accumulator.
struct CompensatedSum {
  long double sum = 0.0L;
  long double carry = 0.0L;

  void add(long double v) {
    const long double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  long double value() const { return sum + carry; }
};

}  // namespace

namespace detail {

double mittag_leffler_series(double beta, double x) {
  check_arguments(beta, x);
  if (x == 0.0) return 1.0;
  const long double b = beta;
  const long double log_z = std::log(static_cast<long double>(-x));
  CompensatedSum acc;
  acc.add(1.0L);
  long double previous = 1.0L;
  for (int k = 1; k < 4000; ++k) {
    const long double mag =
        std::exp(k * log_z - std::lgamma(b * k + 1.0L));
    acc.add((k % 2 == 0) ? mag : -mag);
    // Stop once terms are decreasing and negligible.
    if (mag < previous && mag < 1e-21L * std::fabs(acc.value())) break;
    previous = mag;
  }
  return static_cast<double>(acc.value());
}

double mittag_leffler_integral(double beta, double x) {
  check_arguments(beta, x);
  if (x == 0.0) return 1.0;
  if (beta == 1.0) return std::exp(x);
  const double pi = std::numbers::pi;
  const double z = -x;
  const double tau = std::pow(z, 1.0 / beta);
  const double cos_bp = std::cos(beta * pi);
  const double prefactor = std::sin(beta * pi) / (pi * beta);

  // Integrand after r = exp(v / beta); analytic in |Im v| < d.
  auto integrand = [&](double v) {
    const double ev = std::exp(v);
    const double decay = std::exp(-tau * std::exp(v / beta));
    return decay * ev / (ev * ev + 2.0 * ev * cos_bp + 1.0);
  };

  const double strip = 0.9 * std::min(0.5 * beta * pi, pi * (1.0 - beta));
  const double h = 2.0 * pi * strip / 42.0;
  const double upper = std::min(45.0, beta * std::log(60.0 / tau));
  const double lower = std::min(-45.0, -std::log(std::max(z, 1.0)) - 45.0);
  const long n = static_cast<long>(std::ceil((upper - lower) / h));
  CompensatedSum acc;
  for (long i = 0; i <= n; ++i) acc.add(integrand(lower + i * h));
  return prefactor * h * static_cast<double>(acc.value());
}

double mittag_leffler_asymptotic(double beta, double x) {
  check_arguments(beta, x);
  if (beta == 1.0) return std::exp(x);
  if (x == 0.0) {
    throw DomainError("mittag_leffler_asymptotic: x must be nonzero");
  }
  const double z = -x;
  const double log_z = std::log(z);
  const double pi = std::numbers::pi;
  // 1/Gamma(1 - y) = Gamma(y) sin(pi y) / pi, with y = beta k.
  double sum = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 2000; ++k) {
    const double y = beta * k;
    const double s = boost::math::sin_pi(y);
    const double mag = std::exp(std::lgamma(y) - k * log_z) / pi;
    if (mag > previous) break;  // optimal truncation
    previous = mag;
    const double term = mag * s;
    sum += (k % 2 == 1) ? term : -term;
    if (mag < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

}  // namespace detail

double mittag_leffler(double beta, double x) {
  check_arguments(beta, x);
  if (x == 0.0) return 1.0;
  if (beta == 1.0) return std::exp(x);
  const double tau = std::pow(-x, 1.0 / beta);
  if (tau <= kSeriesTauMax) return detail::mittag_leffler_series(beta, x);
  if (tau < kAsymptoticTauMin) return detail::mittag_leffler_integral(beta, x);
  return detail::mittag_leffler_asymptotic(beta, x);
}

}  // namespace shc
