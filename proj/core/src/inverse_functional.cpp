#include "shc/errors.hpp"
#include "shc/subordinator.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/policies/error_handling.hpp>
#include <boost/math/policies/error_handling.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <string>
#include <vector>

namespace shc {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// exp(-w) is below 1e-304 past this point.
constexpr double kWMax = 700.0;

double log_zolotarev_a(double beta, double u, double complement) {
  const double sin_u = std::sin(std::min(u, complement));
  return (std::log(std::sin(beta * u)) - std::log(sin_u)) / (1.0 - beta) +
         std::log(std::sin((1.0 - beta) * u)) - std::log(std::sin(beta * u));
}

}  // namespace

double zolotarev_a(double beta, double u, double complement) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("zolotarev_a: beta must lie in (0, 1)");
  }
  return std::exp(log_zolotarev_a(beta, u, complement));
}

FunctionalEstimate expected_functional(double beta, double t,
                                       const std::function<double(double)>& g,
                                       const FunctionalOptions& options) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("expected_functional: beta must lie in (0, 1)");
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("expected_functional: t must be positive and finite");
  }
  using boost::math::quadrature::exp_sinh;
  using boost::math::quadrature::tanh_sinh;
  tanh_sinh<double> finite_rule(options.max_levels);
  exp_sinh<double> tail_rule(options.max_levels);

  const double shape_exponent = 1.0 - beta;  // E_t = c * w^{1-beta}
  const double log_t_beta = beta * std::log(t);
  std::vector<double> y_breaks = options.breakpoints;
  std::sort(y_breaks.begin(), y_breaks.end());

  double worst_inner_error = 0.0;

  // Inner integral: int_0^inf g(c w^{1-beta}) exp(-w) dw.
  auto inner = [&](double log_c) {
    const double c = std::exp(log_c);
    auto integrand = [&](double w) {
      if (w <= 0.0) return 0.0;
      const double x = std::max(c * std::pow(w, shape_exponent),
                                std::numeric_limits<double>::min());
      return g(x) * std::exp(-w);
    };
    std::vector<double> w_breaks{1.0};
    for (double y : y_breaks) {
      if (!(y > 0.0)) continue;
      const double w = std::exp((std::log(y) - log_c) / shape_exponent);
      if (w > 1e-280 && w < kWMax) w_breaks.push_back(w);
    }
    std::sort(w_breaks.begin(), w_breaks.end());
    w_breaks.erase(std::unique(w_breaks.begin(), w_breaks.end()), w_breaks.end());

    double total = 0.0;
    double error = 0.0;
    double left = 0.0;
    for (double right : w_breaks) {
      double err = 0.0;
      total += finite_rule.integrate(integrand, left, right, options.tolerance,
                                     &err);
      error += err;
      left = right;
    }
    double err = 0.0;
    auto shifted = [&](double s) { return integrand(left + s); };
    total += tail_rule.integrate(shifted, options.tolerance, &err);
    error += err;
    worst_inner_error = std::max(worst_inner_error, error);
    return total;
  };

  auto log_c_of = [&](double u, double complement) {
    return log_t_beta + (beta - 1.0) * log_zolotarev_a(beta, u, complement);
  };

  // Outer integral over u in (0, pi), split at pi/2; the right half runs in
  // the complement variable pi - u so points near u = pi stay resolved.
  double left_err = 0.0;
  double right_err = 0.0;
  double left_half = 0.0;
  double right_half = 0.0;
  try {
    left_half = finite_rule.integrate(
        [&](double u) { return inner(log_c_of(u, std::numbers::pi - u)); }, 0.0,
        kHalfPi, options.tolerance, &left_err);
    right_half = finite_rule.integrate(
        [&](double c) { return inner(log_c_of(std::numbers::pi - c, c)); }, 0.0,
        kHalfPi, options.tolerance, &right_err);
  } catch (const DomainError&) {
    throw;
  } catch (const std::domain_error& e) {
    // Boost.Math reports non-finite integrand values this way.
    throw NumericalError(std::string("expected_functional: ") + e.what());
  } catch (const boost::math::evaluation_error& e) {
    throw NumericalError(std::string("expected_functional: ") + e.what());
  }

  const double value = (left_half + right_half) / std::numbers::pi;
  if (!std::isfinite(value)) {
    throw NumericalError("expected_functional: integral is not finite");
  }
  const double error =
      (left_err + right_err) /
          std::numbers::pi +
      worst_inner_error;
  return {value, error};
}

}  // namespace shc
