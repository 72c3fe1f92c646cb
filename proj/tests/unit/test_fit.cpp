#include "shc/errors.hpp"
#include "shc/fit.hpp"
#include "shc/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace shc;

TEST_CASE("exact power law") {
  std::vector<double> t, y;
  for (double x = 0.01; x < 100.0; x *= 2.3) {
    t.push_back(x);
    y.push_back(3.0 * x * x);
  }
  const auto fit = fit_loglog(t, y);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-13));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_FALSE(fit.low_confidence);
}

TEST_CASE("noisy square root") {
  Rng rng(4);
  std::vector<double> t, y;
  for (double x = 1e-4; x < 1.0; x *= 1.25) {
    t.push_back(x);
    y.push_back(std::sqrt(x) * (1.0 + 0.01 * rng.normal()));
  }
  const auto fit = fit_loglog(t, y);
  CHECK(std::abs(fit.slope - 0.5) < 0.02);
  CHECK(fit.slope_std_error < 0.01);
}

TEST_CASE("two points give the finite-difference slope and are flagged") {
  const std::vector<double> t{2.0, 8.0}, y{5.0, 0.3};
  const auto fit = fit_loglog(t, y);
  CHECK(fit.slope == doctest::Approx(std::log(0.3 / 5.0) / std::log(4.0)).epsilon(1e-15));
  CHECK(fit.low_confidence);
  CHECK(fit.points == 2);
}

TEST_CASE("invalid input") {
  const std::vector<double> t{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(fit_loglog(t, std::vector<double>{1.0, 0.0, 2.0}), DomainError);
  CHECK_THROWS_AS(fit_loglog(t, std::vector<double>{1.0, -1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(fit_loglog(std::vector<double>{1.0}, std::vector<double>{1.0}), DomainError);
  CHECK_THROWS_AS(fit_loglog(t, std::vector<double>{1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(fit_loglog(std::vector<double>{2.0, 2.0}, std::vector<double>{1.0, 3.0}),
                  DomainError);
}
