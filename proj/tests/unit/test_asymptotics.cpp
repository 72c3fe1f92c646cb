#include "oracle_values.hpp"
#include "support.hpp"

#include "shc/asymptotics.hpp"
#include "shc/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace shc;

TEST_CASE("regimes and rate functions") {
  CHECK(RegimeTag::of(0.5).regime == Regime::subcritical);
  CHECK(RegimeTag::of(1.0).regime == Regime::critical);
  CHECK(RegimeTag::of(1.5).regime == Regime::supercritical);
  CHECK_THROWS_AS(RegimeTag::of(2.0), DomainError);
  CHECK_THROWS_AS(RegimeTag::of(0.0), DomainError);

  CHECK(f_alpha_eval(1.0, std::exp(-1.0)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(f_alpha_eval(1.5, 8.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(f_alpha_eval(0.5, 0.3) == 0.3);
  CHECK_THROWS_AS(f_alpha_eval(1.0, 2.0), DomainError);
}

TEST_CASE("fractional perimeter of an interval") {
  CHECK(support::rel_diff(frac_perimeter_interval(0.5, 1.0), oracle::kFracPerimeterHalfUnit) < 1e-13);
  CHECK(support::rel_diff(frac_perimeter_interval(0.25, M_PI), oracle::kFracPerimeterQuarterPi) < 1e-13);
  CHECK(support::rel_diff(frac_perimeter_interval(0.75, 1.0), oracle::kFracPerimeterThreeQuarterUnit) < 1e-13);

  for (double alpha : {0.25, 0.5, 0.75}) {
    CHECK(frac_perimeter_interval(alpha, 2.0) / frac_perimeter_interval(alpha, 1.0) ==
          doctest::Approx(std::pow(2.0, 1.0 - alpha)).epsilon(1e-14));
    for (double length : {1.0, M_PI}) {
      CAPTURE(alpha);
      CAPTURE(length);
      const auto numeric = frac_perimeter_numeric(IntervalDomain(0.0, length), alpha);
      CHECK(std::abs(numeric.value - frac_perimeter_interval(alpha, length)) < 1e-6);
    }
  }
  CHECK(frac_perimeter_interval(0.999, 1.0) > 50.0 * frac_perimeter_interval(0.9, 1.0));
  CHECK(frac_perimeter_interval(0.9999, 1.0) > 9.0 * frac_perimeter_interval(0.999, 1.0));
  CHECK_THROWS_AS(frac_perimeter_interval(1.0, 1.0), DomainError);
}

TEST_CASE("jump kernel constant reproduces known values") {
  // c(1, 1) = 1/pi for the Cauchy process.
  CHECK(jump_kernel_constant(1.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-14));
}

TEST_CASE("small-time constants c_alpha") {
  const auto g = GeometryInput::interval(IntervalDomain(0.0, 1.0));
  CHECK(c_alpha_eval(RegimeTag::of(1.0), g) == doctest::Approx(2.0 / M_PI).epsilon(1e-15));
  CHECK(c_alpha_eval(RegimeTag::of(1.5), g, oracle::kSupConstant15) ==
        doctest::Approx(2.0 * oracle::kSupConstant15).epsilon(1e-15));
  CHECK(c_alpha_eval(RegimeTag::of(0.5), g) == frac_perimeter_interval(0.5, 1.0));
  CHECK_THROWS_AS(c_alpha_eval(RegimeTag::of(1.5), g), DomainError);

  GeometryInput disk{M_PI, 2.0 * M_PI, std::nullopt, 2};
  CHECK_THROWS_AS(c_alpha_eval(RegimeTag::of(0.5), disk), DomainError);
  disk.frac_perimeter = 3.0;
  CHECK(c_alpha_eval(RegimeTag::of(0.5), disk) == 3.0);
}

TEST_CASE("large-time constant") {
  const auto eig = bm_interval_eigensystem(IntervalDomain(0.0, M_PI), 100'000);
  const auto c = large_time_constant(eig, 0.5);
  CHECK(std::abs(c.value - oracle::kLargeTimeConstantPiHalf) <= c.tail_bound + 1e-12);
  CHECK(c.tail_bound < 1e-9);

  // Brute-force odd sum of 8 / (pi n^4) over 10^6 terms reproduces pi^3 / 12.
  double brute = 0.0;
  for (long n = 1999999; n >= 1; n -= 2) brute += 8.0 / (M_PI * std::pow(static_cast<double>(n), 4));
  CHECK(brute == doctest::Approx(M_PI * M_PI * M_PI / 12.0).epsilon(1e-14));

  const auto c0 = large_time_constant(eig, 0.0);
  double direct = 0.0;
  for (const auto& p : eig.pairs()) direct += p.mass_sq / p.lambda;
  CHECK(c0.value == doctest::Approx(direct).epsilon(1e-15));

  const EigenSystem single({{1.0, 8.0 / M_PI}}, 8.0 / M_PI);
  CHECK(large_time_constant(single, 0.3).value ==
        doctest::Approx(8.0 / M_PI / std::tgamma(0.7)).epsilon(1e-15));
  CHECK_THROWS_AS(large_time_constant(eig, 1.0), DomainError);
}

TEST_CASE("asymptote assembly") {
  const auto half = LaplaceExponent::stable(0.5);
  const auto g = GeometryInput::interval(IntervalDomain(0.0, 1.0));
  const double t = 1e-6;
  CHECK(small_time_asymptote(1.5, half, g, t, oracle::kSupConstant15) ==
        doctest::Approx(2.0 * oracle::kSupConstant15 * std::tgamma(5.0 / 3.0) /
                        std::tgamma(4.0 / 3.0) * std::pow(t, 1.0 / 3.0))
            .epsilon(1e-14));
  CHECK(small_time_asymptote(0.5, half, g, t) ==
        doctest::Approx(frac_perimeter_interval(0.5, 1.0) / std::tgamma(1.5) * std::sqrt(t))
            .epsilon(1e-14));
  CHECK(small_time_asymptote(1.0, half, g, t) ==
        doctest::Approx(2.0 / (M_PI * std::tgamma(1.5)) * std::sqrt(t) * std::log(std::pow(t, -0.5)))
            .epsilon(1e-14));
  CHECK_THROWS_AS(small_time_asymptote(1.0, half, g, 2.0), DomainError);
  CHECK_THROWS_AS(small_time_asymptote(1.5, LaplaceExponent::drift(), g, t, 1.0), DomainError);

  const auto eig = bm_interval_eigensystem(IntervalDomain(0.0, M_PI), 1000);
  CHECK(large_time_asymptote(eig, half, 100.0) ==
        doctest::Approx(0.1 * large_time_constant(eig, 0.5).value).epsilon(1e-15));

  CHECK(subordinate_log_rate(LaplaceExponent::drift(), 1.0) == -1.0);
  CHECK(subordinate_log_rate(half, 1.0) == -1.0);
  CHECK(subordinate_log_rate(LaplaceExponent::tempered_stable(0.5, 2.0), 1.0) ==
        doctest::Approx(-(std::sqrt(3.0) - std::sqrt(2.0))).epsilon(1e-14));

  CHECK(moment_asymptote(1.0, LaplaceExponent::stable(0.3), 0.01) ==
        doctest::Approx(std::pow(0.01, 0.3) / std::tgamma(1.3)).epsilon(1e-14));
  CHECK(moment_asymptote(1.0 / 1.5, half, 0.01) ==
        doctest::Approx(std::tgamma(5.0 / 3.0) / std::tgamma(4.0 / 3.0) * std::pow(0.01, 1.0 / 3.0))
            .epsilon(1e-14));
  const auto second = expected_functional(0.5, 1.0, [](double x) { return x * x; });
  CHECK(std::abs(moment_asymptote(2.0, half, 1.0) - second.value) < 1e-6);
}

TEST_CASE("monotonized x ln(1/x)") {
  CHECK(v_monotone(std::exp(-1.0)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(v_monotone(std::exp(-2.0)) == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-15));
  CHECK(v_monotone(5.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  double previous = 0.0;
  for (double x = 1e-300; x < 1e3; x *= 1.5) {
    REQUIRE(v_monotone(x) >= previous);
    previous = v_monotone(x);
  }
  CHECK_THROWS_AS(v_monotone(0.0), DomainError);
}

TEST_CASE("log moments") {
  const auto v1 = expected_v(0.5, 1.0);
  CHECK(v1.value <= std::exp(-1.0));
  CHECK(std::abs(v1.value - oracle::kVHalfT1) < 1e-10);
  CHECK(std::abs(expected_v(0.5, 1e-4).value - oracle::kVHalfT1em4) < 1e-10);
  CHECK(std::abs(expected_xlog(0.5, 1e-6).value - oracle::kXlogHalfT1em6) < 1e-14);
  CHECK(expected_xlog(0.5, 1e-6).asymptote ==
        doctest::Approx(std::sqrt(1e-6) * std::log(1e3) / std::tgamma(1.5)).epsilon(1e-14));
}

TEST_CASE("decomposition of E[E ln(1/E)] through V") {
  // E[E ln(1/E)] = E[V(E)] - e^{-1} P(E >= e^{-1}) + E[E ln(1/E); E >= e^{-1}].
  const double e = std::exp(-1.0);
  FunctionalOptions options;
  options.breakpoints = {e, 1.0};
  for (double t : {1e-6, 1e-2, 1.0}) {
    CAPTURE(t);
    const double xlog = expected_xlog(0.5, t).value;
    const double v = expected_v(0.5, t).value;
    const double tail_p =
        expected_functional(0.5, t, [e](double x) { return x >= e ? 1.0 : 0.0; }, options).value;
    const double tail_xlog = expected_functional(
        0.5, t, [e](double x) { return x >= e ? -x * std::log(x) : 0.0; }, options).value;
    CHECK(std::abs(xlog - (v - e * tail_p + tail_xlog)) < 1e-8);
  }
}

TEST_CASE("tail exponent probe") {
  const std::vector<double> deltas{0.5, 1.0, 2.0};
  std::vector<double> grid;
  for (double t = 1e-3; t <= 0.1 * 1.0001; t *= std::sqrt(10.0)) grid.push_back(t);

  const auto half = tail_decay_probe(0.5, deltas, grid, 100'000, 1);
  CHECK(half.expected_slope == doctest::Approx(-1.0));
  CHECK(std::abs(half.slope - half.expected_slope) < 0.15);

  const auto third = tail_decay_probe(1.0 / 3.0, deltas, grid, 100'000, 2);
  CHECK(third.expected_slope == doctest::Approx(-0.5));
  CHECK(std::abs(third.slope - third.expected_slope) < 0.15);

  // P(E_t > delta) shrinks as t shrinks.
  for (std::size_t i = 1; i < half.points.size(); ++i) {
    const auto& a = half.points[i - 1];
    const auto& b = half.points[i];
    if (a.delta == b.delta) CHECK(b.log_tail_probability > a.log_tail_probability);
  }
  CHECK_THROWS_AS(tail_decay_probe(1.0, deltas, grid, 100, 1), DomainError);
}

TEST_CASE("tail probe at beta = 1/2 against the closed form") {
  // E_1 is half-normal: P(E_t > delta) = erfc(delta / (2 sqrt t)).
  const std::vector<double> deltas{1.0};
  const std::vector<double> grid{0.05, 0.2, 1.0};
  const auto probe = tail_decay_probe(0.5, deltas, grid, 200'000, 3);
  for (const auto& p : probe.points) {
    CAPTURE(p.t);
    const double exact = std::erfc(1.0 / (2.0 * std::sqrt(p.t)));
    CHECK(std::abs(p.tail_probability / exact - 1.0) < 4.0 * p.relative_error + 1e-3);
  }
}
