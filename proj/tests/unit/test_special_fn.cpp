#include "oracle_values.hpp"
#include "support.hpp"

#include "shc/errors.hpp"
#include "shc/special_fn.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace shc;

TEST_CASE("mittag_leffler trivial values") {
  CHECK(mittag_leffler(0.5, 0.0) == 1.0);
  CHECK(mittag_leffler(1.0, -1.0) == doctest::Approx(0.3678794412).epsilon(1e-10));
  CHECK(mittag_leffler(1.0, -7.5) == doctest::Approx(std::exp(-7.5)).epsilon(1e-15));
}

TEST_CASE("E_1/2(-1) matches the erfc identity") {
  const double erfc_form = std::exp(1.0) * std::erfc(1.0);
  CHECK(support::rel_diff(mittag_leffler(0.5, -1.0), oracle::kMlHalfMinusOne) < 1e-14);
  CHECK(support::rel_diff(erfc_form, oracle::kMlHalfMinusOne) < 1e-14);
}

TEST_CASE("mittag_leffler against high-precision reference values") {
  for (const auto& p : oracle::kMittagLeffler) {
    CAPTURE(p.beta);
    CAPTURE(p.x);
    CHECK(support::rel_diff(mittag_leffler(p.beta, p.x), p.value) < 1e-12);
  }
}

TEST_CASE("E_1/2(-x) = exp(x^2) erfc(x) across all evaluation branches") {
  // exp(x^2) stays finite up to x = 26, well inside the asymptotic branch.
  for (double x : {0.1, 0.7, 2.0, 2.9, 3.5, 5.0, 7.0, 7.2, 9.0, 15.0, 26.0}) {
    CAPTURE(x);
    const double expected = std::exp(x * x) * std::erfc(x);
    CHECK(support::rel_diff(mittag_leffler(0.5, -x), expected) < 1e-12);
  }
}

TEST_CASE("evaluation branches agree where they overlap") {
  for (double beta : {0.2, 0.35, 0.5, 0.65, 0.8, 0.95}) {
    CAPTURE(beta);
    for (double tau : {6.0, 7.5}) {
      const double x = -std::pow(tau, beta);
      CHECK(support::rel_diff(detail::mittag_leffler_series(beta, x),
                              detail::mittag_leffler_integral(beta, x)) < 1e-11);
    }
    for (double tau : {60.0, 120.0}) {
      const double x = -std::pow(tau, beta);
      CHECK(support::rel_diff(detail::mittag_leffler_asymptotic(beta, x),
                              detail::mittag_leffler_integral(beta, x)) < 1e-11);
    }
  }
}

TEST_CASE("E_beta(-x) is completely monotone: positive and decreasing") {
  for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    CAPTURE(beta);
    double previous = 1.0;
    for (double x = 1e-3; x < 1e6; x *= 1.3) {
      const double v = mittag_leffler(beta, -x);
      CAPTURE(x);
      CHECK(v > 0.0);
      CHECK(v <= previous);
      previous = v;
    }
  }
}

TEST_CASE("mittag_leffler rejects arguments outside its domain") {
  CHECK_THROWS_AS(mittag_leffler(0.0, -1.0), DomainError);
  CHECK_THROWS_AS(mittag_leffler(1.2, -1.0), DomainError);
  CHECK_THROWS_AS(mittag_leffler(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(mittag_leffler(0.5, std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(mittag_leffler(0.5, -std::numeric_limits<double>::infinity()), DomainError);
}
