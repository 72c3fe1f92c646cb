#pragma once

#include "shc/fit.hpp"
#include "shc/spectral.hpp"
#include "shc/subordinator.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace shc {

// ---------------------------------------------------------------------------
// Small-time regimes

enum class Regime { subcritical, critical, supercritical };

std::string_view to_string(Regime r) noexcept;

/// alpha together with its small-time regime: (0,1) subcritical, 1 critical,
/// (1,2) supercritical. Throws DomainError outside (0, 2).
struct RegimeTag {
  double alpha;
  Regime regime;

  static RegimeTag of(double alpha);
};

/// Geometry entering the small-time constants. For d = 1 the fractional
/// perimeter is computed from |Omega|; for d >= 2 it must be supplied in the
/// subcritical regime.
struct GeometryInput {
  double volume;
  double perimeter;
  std::optional<double> frac_perimeter;
  int dimension = 1;

  static GeometryInput interval(const IntervalDomain& domain) {
    return {domain.volume(), IntervalDomain::boundary_measure(), std::nullopt, 1};
  }
};

/// Rate function: t^{1/alpha}, t ln(1/t) (alpha = 1, needs t < 1), or t.
double f_alpha_eval(double alpha, double t);

/// Jump-kernel normalization c(1, alpha) = alpha 2^{alpha-1} Gamma((1+alpha)/2)
/// / (sqrt(pi) Gamma(1 - alpha/2)), the constant for which the generator of
/// exp(-t|xi|^alpha) has Levy density c(1,alpha) |x|^{-1-alpha}.
double jump_kernel_constant(double alpha);

/// Per_alpha((0, L)) = c(1,alpha) 2 L^{1-alpha} / (alpha (1 - alpha)).
double frac_perimeter_interval(double alpha, double length);

struct QuadratureValue {
  double value = 0.0;
  double error = 0.0;
};

/// Per_alpha(Omega) for an interval by quadrature: the inner integral over
/// the complement is done analytically, c/alpha (x^{-alpha} + (L-x)^{-alpha}),
/// and the outer one by tanh-sinh with at most max_levels refinements.
QuadratureValue frac_perimeter_numeric(const IntervalDomain& domain, double alpha,
                                       std::size_t max_levels = 12);

/// c_alpha: E[sup Z] |dOmega| (supercritical), |dOmega| / pi (critical),
/// Per_alpha(Omega) (subcritical). sup_constant is required in the
/// supercritical regime; missing inputs throw DomainError.
double c_alpha_eval(const RegimeTag& regime, const GeometryInput& geometry,
                    std::optional<double> sup_constant = std::nullopt);

// ---------------------------------------------------------------------------
// Large time

/// sum_n m_n^2 / (lambda_n Gamma(1 - beta)) with its tail certificate
/// (missing mass / (lambda_N Gamma(1 - beta))). beta in [0, 1).
SeriesValue large_time_constant(const EigenSystem& eig, double beta);

/// phi(1/t) * large_time_constant(eig, index_at_zero(phi)).
double large_time_asymptote(const EigenSystem& eig, const LaplaceExponent& phi,
                            double t);

/// -phi(lambda_1): the exponential rate of the subordinate heat content.
double subordinate_log_rate(const LaplaceExponent& phi, double lambda1);

// ---------------------------------------------------------------------------
// Small time

/// Leading term of |Omega| - Q^{Y o E}(t) as t -> 0:
///   supercritical: c_alpha Gamma(1+1/alpha)/Gamma(1+beta/alpha) phi(1/t)^{-1/alpha}
///   critical:      |dOmega| / (pi Gamma(1+beta)) phi(1/t)^{-1} ln phi(1/t)
///   subcritical:   Per_alpha / Gamma(1+beta) phi(1/t)^{-1}
/// with beta = index_at_infinity(phi) in (0, 1). Throws DomainError when
/// phi(1/t) <= 1 in the critical regime.
double small_time_asymptote(double alpha, const LaplaceExponent& phi,
                            const GeometryInput& geometry, double t,
                            std::optional<double> sup_constant = std::nullopt);

/// Gamma(p+1)/Gamma(p beta + 1) phi(1/t)^{-p}, beta = index_at_infinity(phi).
double moment_asymptote(double p, const LaplaceExponent& phi, double t);

/// x ln(1/x) on (0, 1/e], 1/e beyond. Nondecreasing and continuous.
double v_monotone(double x);

/// A quadrature value of E[h(E_t)] together with the asymptote
/// phi(1/t)^{-1} ln phi(1/t) / Gamma(1+beta) it is compared against.
struct LogMomentEstimate {
  double value = 0.0;
  double error = 0.0;
  double asymptote = 0.0;
};

/// E[V(E_t)] for the inverse beta-stable time change.
LogMomentEstimate expected_v(double beta, double t);

/// E[E_t ln(1/E_t)] for the inverse beta-stable time change.
LogMomentEstimate expected_xlog(double beta, double t);

// ---------------------------------------------------------------------------
// Tail exponent probe

struct TailProbePoint {
  double t;
  double delta;
  double tail_probability;
  /// ln of tail_probability; stays finite when tail_probability underflows.
  double log_tail_probability;
  /// Relative standard error of tail_probability.
  double relative_error;
};

struct TailProbeFit {
  double delta;
  LogLogFit fit;
};

struct TailProbeResult {
  std::vector<TailProbePoint> points;
  std::vector<TailProbeFit> fits;
  /// Mean slope over deltas; expected -beta/(1-beta).
  double slope = 0.0;
  double expected_slope = 0.0;
};

/// Estimates P(E_t > delta) = P(D_1 < t delta^{-1/beta}) by Monte Carlo over
/// n_samples draws of the Kanter angle U, using the conditional probability
/// P(D_1 < x | U) = exp(-A(U) x^{-beta/(1-beta)}) instead of raw indicators
/// so that tails far below 1/n_samples are still resolved. For each delta,
/// fits ln(-ln P) against ln t; the slope should approach -beta/(1-beta).
/// Throws NumericalError if a tail estimate underflows to zero.
TailProbeResult tail_decay_probe(double beta, std::span<const double> deltas,
                                 std::span<const double> t_grid, long n_samples,
                                 std::uint64_t seed);

}  // namespace shc
