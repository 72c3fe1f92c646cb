#pragma once

#include "shc/laplace_inversion.hpp"
#include "shc/rng.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace shc {

/// phi(lambda) = lambda^beta, beta in (0, 1).
struct Stable {
  double beta;
};

/// phi(lambda) = (lambda + kappa)^beta - kappa^beta, beta in (0, 1), kappa > 0.
struct TemperedStable {
  double beta;
  double kappa;
};

/// phi(lambda) = lambda^a + lambda^b, 0 < a < b <= 1 (b = 1 adds a unit drift).
struct SumOfStables {
  double a;
  double b;
};

/// phi(lambda) = lambda: the identity time change D_t = E_t = t. Test double.
struct Drift {};

/// Laplace exponent of a subordinator, E[exp(-lambda D_t)] = exp(-t phi(lambda)),
/// together with its regular-variation indices at 0+ and at infinity.
class LaplaceExponent {
 public:
  using Variant = std::variant<Stable, TemperedStable, SumOfStables, Drift>;

  /// Validates parameters; throws DomainError on out-of-range values.
  explicit LaplaceExponent(Variant v);

  static LaplaceExponent stable(double beta) { return LaplaceExponent(Stable{beta}); }
  static LaplaceExponent tempered_stable(double beta, double kappa) {
    return LaplaceExponent(TemperedStable{beta, kappa});
  }
  static LaplaceExponent sum_of_stables(double a, double b) {
    return LaplaceExponent(SumOfStables{a, b});
  }
  static LaplaceExponent drift() { return LaplaceExponent(Drift{}); }

  /// phi(lambda) for lambda >= 0.
  double operator()(double lambda) const;
  MpReal operator()(const MpReal& lambda) const;

  double index_at_zero() const noexcept { return index_at_zero_; }
  double index_at_infinity() const noexcept { return index_at_infinity_; }

  const Variant& variant() const noexcept { return variant_; }
  bool is_stable() const noexcept { return std::holds_alternative<Stable>(variant_); }

  /// e.g. "stable(beta=0.5)".
  std::string describe() const;

 private:
  Variant variant_;
  double index_at_zero_ = 0.0;
  double index_at_infinity_ = 0.0;
};

/// phi_eval: throws DomainError for negative lambda.
double phi_eval(const LaplaceExponent& phi, double lambda);

// ---------------------------------------------------------------------------
// Sampling

/// One-sided beta-stable variate D_1 with E[exp(-lambda D_1)] = exp(-lambda^beta),
/// by Kanter's representation
///   D_1 = sin(beta U) / sin(U)^{1/beta} * (sin((1-beta) U) / W)^{(1-beta)/beta},
/// U ~ Uniform(0, pi), W ~ Exp(1).
double sample_stable_subordinator_unit(double beta, Rng& rng);
double sample_stable_subordinator_unit(double beta, std::uint64_t seed);

/// Increment D_{s+dt} - D_s for the given exponent. Tempered increments use
/// exponential-tilting rejection against the stable increment with at most
/// max_rejections proposals (NumericalError beyond that).
double sample_increment(const LaplaceExponent& phi, double dt, Rng& rng,
                        long max_rejections = 1'000'000);

/// Discretized subordinator path D_{k du}, k = 0, 1, ..., extended until it
/// first exceeds the horizon.
struct PathSample {
  double delta_u = 0.0;
  std::vector<double> values;
  double horizon = 0.0;
  std::uint64_t seed = 0;

  double max_value() const { return values.empty() ? 0.0 : values.back(); }
};

/// Increments that do not strictly increase the path in floating point are
/// rejected and redrawn. Throws DomainError for nonpositive horizon or step.
PathSample sample_path(const LaplaceExponent& phi, double horizon,
                       double delta_u, std::uint64_t seed);

/// E_t for one physical time t, known to within bracket_width.
struct InverseTimeSample {
  double t = 0.0;
  double value = 0.0;
  double bracket_width = 0.0;
};

/// E_t = inf{u : D_u > t} on the path grid: the grid time of the first
/// strict exceedance. Throws HorizonError when t >= max(path).
InverseTimeSample inverse_at(const PathSample& path, double t);

/// Exact-in-distribution E_t for the inverse beta-stable subordinator via
/// self-similarity E_t = (t / D_1)^beta. The same seed reuses D_1, so
/// samples at different t from one seed satisfy E_t = t^beta E_1.
double sample_inverse_stable_exact(double beta, double t, Rng& rng);
double sample_inverse_stable_exact(double beta, double t, std::uint64_t seed);

/// D_t sampled directly at physical time t (exact in distribution).
double sample_subordinator_at(const LaplaceExponent& phi, double t, Rng& rng);

// ---------------------------------------------------------------------------
// Transforms of the inverse subordinator

/// Laplace transform in t of E[exp(-a E_t)]: phi(s) / (s (phi(s) + a)).
double lt_inverse_time(const LaplaceExponent& phi, double a, double s);

/// The same transform as a TransformFunction evaluated in MpReal.
TransformFunction lt_inverse_time_transform(const LaplaceExponent& phi, double a);

/// E[exp(-a E_t)]. Stable exponents use E_beta(-a t^beta); the drift double
/// uses exp(-a t); other exponents invert lt_inverse_time numerically.
double expected_laplace(const LaplaceExponent& phi, double a, double t,
                        const InversionOptions& options = {});

// ---------------------------------------------------------------------------
// Functionals of the inverse beta-stable time change

struct FunctionalOptions {
  /// Relative tolerance handed to the nested tanh-sinh / exp-sinh rules.
  double tolerance = 1e-12;
  /// Maximum refinement levels for each quadrature (n_quadrature).
  std::size_t max_levels = 15;
  /// Points in E_t-space where g has a kink or jump (e.g. truncation
  /// thresholds); the inner integral is split there.
  std::vector<double> breakpoints;
};

struct FunctionalEstimate {
  double value = 0.0;
  double error = 0.0;
};

/// E[g(E_t)] for the inverse beta-stable subordinator.
///
/// Uses E_t =d t^beta W^{1-beta} A(U)^{beta-1} with W ~ Exp(1) and U ~ U(0, pi),
/// where A is Zolotarev's function from Kanter's representation: given U,
/// E_t is Weibull with shape 1/(1-beta). The outer integral over U and the
/// inner integral over W are both done by double-exponential quadrature.
/// g must be finite on (0, inf) with at most polynomial growth; a
/// non-finite result raises NumericalError.
FunctionalEstimate expected_functional(double beta, double t,
                                       const std::function<double(double)>& g,
                                       const FunctionalOptions& options = {});

/// Zolotarev's function A(u) = (sin(beta u)/sin u)^{1/(1-beta)} sin((1-beta)u)/sin(beta u).
/// `complement` is pi - u, passed separately for accuracy near u = pi.
double zolotarev_a(double beta, double u, double complement);

}  // namespace shc
