#pragma once

namespace shc {

/// One-parameter Mittag-Leffler function E_beta(x) = sum_k x^k / Gamma(beta k + 1)
/// on the negative half-line.
///
/// Requires beta in (0, 1] and x <= 0; throws DomainError otherwise. The
/// result lies in (0, 1] and is nonincreasing in |x|. Evaluation picks one of
/// three representations by tau = |x|^(1/beta):
///   - tau <= 8: the power series, summed in long double with Neumaier
///     compensation;
///   - 8 < tau < 50: the Laplace-type spectral integral
///       E_beta(-tau^beta) = int_0^inf exp(-r tau) K_beta(r) dr,
///     integrated with a trapezoidal rule after r = exp(v / beta);
///   - tau >= 50: the algebraic asymptotic expansion
///       -sum_{k>=1} x^{-k} / Gamma(1 - beta k), optimally truncated.
/// beta == 1 returns exp(x).
double mittag_leffler(double beta, double x);

namespace detail {
// Individual branches, exposed for cross-branch tests.
double mittag_leffler_series(double beta, double x);
double mittag_leffler_integral(double beta, double x);
double mittag_leffler_asymptotic(double beta, double x);
}  // namespace detail

}  // namespace shc
