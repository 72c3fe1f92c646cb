#include "oracle_values.hpp"
#include "support.hpp"

#include "shc/errors.hpp"
#include "shc/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace shc;

TEST_CASE("interval geometry") {
  const IntervalDomain d(-1.0, 2.0);
  CHECK(d.volume() == 3.0);
  CHECK(IntervalDomain::boundary_measure() == 2.0);
  CHECK_THROWS_AS(IntervalDomain(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(IntervalDomain(0.0, INFINITY), DomainError);
}

TEST_CASE("Brownian eigenpairs on (0, pi)") {
  const auto eig = bm_interval_eigensystem(IntervalDomain(0.0, M_PI), 10);
  CHECK(eig.pairs()[0].lambda == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eig.pairs()[0].mass_sq == doctest::Approx(8.0 / M_PI).epsilon(1e-15));
  CHECK(eig.pairs()[2].lambda == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(eig.pairs()[2].mass_sq == doctest::Approx(8.0 / (9.0 * M_PI)).epsilon(1e-15));
  for (std::size_t n = 2; n <= 10; n += 2) CHECK(eig.pairs()[n - 1].mass_sq == 0.0);
}

TEST_CASE("eigenvalues scale as L^-2 and masses as L") {
  const auto a = bm_interval_eigensystem(IntervalDomain(0.0, 1.0), 5);
  const auto b = bm_interval_eigensystem(IntervalDomain(3.0, 6.0), 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(b.pairs()[i].lambda == doctest::Approx(a.pairs()[i].lambda / 9.0).epsilon(1e-14));
    CHECK(b.pairs()[i].mass_sq == doctest::Approx(3.0 * a.pairs()[i].mass_sq).epsilon(1e-14));
  }
}

TEST_CASE("masses sum to |Omega| with the odd-tail bound") {
  const std::size_t n = 100'000;
  const auto eig = bm_interval_eigensystem(IntervalDomain(0.0, M_PI), n);
  const double missing = M_PI - eig.captured_mass();
  CHECK(missing > 0.0);
  CHECK(missing <= 1.3e-5);
  CHECK(missing <= 4.0 / (M_PI * n));
  CHECK(eig.missing_mass() == doctest::Approx(missing).epsilon(1e-9));
  // Partial sums increase toward pi.
  double partial = 0.0;
  for (const auto& p : eig.pairs()) {
    partial += p.mass_sq;
    REQUIRE(partial <= M_PI);
  }
}

TEST_CASE("weighted_series") {
  const auto eig = bm_interval_eigensystem(IntervalDomain(0.0, M_PI), 2000);

  const auto unit = weighted_series(eig, [](double) { return 1.0; });
  CHECK(std::abs(unit.value - M_PI) <= unit.tail_bound + 1e-12);
  CHECK(unit.terms_used == eig.size());

  const double t = 5.0;
  const auto leading = weighted_series(eig, [t](double l) { return std::exp(-l * t); });
  CHECK(leading.value == doctest::Approx(std::exp(-t) * 8.0 / M_PI).epsilon(1e-12));

  const auto half = weighted_series(eig, [](double l) { return std::exp(-0.5 * l); },
                                    SeriesTolerance{1e-14, 0.0});
  CHECK(std::abs(half.value - oracle::kWeightedExpHalfPi) < 1e-12);
  CHECK(half.terms_used < 20);
  CHECK(half.tail_bound <= 1e-14);

  // The same value from a direct 200-term sum.
  double direct = 0.0;
  for (int n = 1; n <= 399; n += 2) direct += std::exp(-0.5 * n * n) * 8.0 / (M_PI * n * n);
  CHECK(std::abs(half.value - direct) < 1e-12);
}

TEST_CASE("weighted_series refuses tolerances the stored terms cannot certify") {
  const auto eig = bm_interval_eigensystem(IntervalDomain(0.0, M_PI), 10);
  CHECK_THROWS_AS(weighted_series(eig, [](double) { return 1.0; }, SeriesTolerance{1e-6, 0.0}),
                  TruncationError);
  CHECK_THROWS_AS(weighted_series(eig, [](double) { return 1.5; }), NumericalError);
}

TEST_CASE("EigenSystem validation") {
  CHECK_THROWS_AS(EigenSystem({}, 1.0), ValidationError);
  CHECK_THROWS_AS(EigenSystem({{1.0, 0.5}}, 0.0), ValidationError);
  CHECK_THROWS_AS(EigenSystem({{0.0, 0.5}}, 1.0), ValidationError);
  CHECK_THROWS_AS(EigenSystem({{1.0, -0.5}}, 1.0), ValidationError);
  CHECK_THROWS_AS(EigenSystem({{1.0, 0.5}, {1.0, 0.1}}, 1.0), ValidationError);
  CHECK_THROWS_AS(EigenSystem({{1.0, 0.5}, {3.0, 0.1}, {2.0, 0.1}}, 1.0), ValidationError);
  CHECK_THROWS_AS(EigenSystem({{1.0, 0.7}, {2.0, 0.7}}, 1.0), ValidationError);
  CHECK_NOTHROW(EigenSystem({{1.0, 0.7}, {2.0, 0.2}, {2.0, 0.1}}, 1.0));
}

TEST_CASE("eigen-table round trip and parse errors") {
  const auto eig = bm_interval_eigensystem(IntervalDomain(0.0, 2.0), 25);
  std::stringstream buffer;
  write_eigen_table(buffer, eig);
  const auto back = read_eigen_table(buffer);
  REQUIRE(back.size() == eig.size());
  CHECK(back.total_mass() == eig.total_mass());
  for (std::size_t i = 0; i < eig.size(); ++i) {
    CHECK(back.pairs()[i].lambda == eig.pairs()[i].lambda);
    CHECK(back.pairs()[i].mass_sq == eig.pairs()[i].mass_sq);
  }

  std::istringstream commented("# a comment\n#mass 1.0\n\n1 0.5  # first mode\n4 0.25\n");
  const auto c = read_eigen_table(commented);
  CHECK(c.size() == 2);
  CHECK(c.missing_mass() == doctest::Approx(0.25));

  std::istringstream no_mass("1 0.5\n");
  CHECK_THROWS_AS(read_eigen_table(no_mass), ValidationError);
  std::istringstream garbage("#mass 1\n1 0.5\nnot numbers\n");
  CHECK_THROWS_AS(read_eigen_table(garbage), ValidationError);
  std::istringstream extra("#mass 1\n1 0.5 7\n");
  CHECK_THROWS_AS(read_eigen_table(extra), ValidationError);
  CHECK_THROWS_AS(read_eigen_table_file("/nonexistent/table.txt"), ValidationError);
}
