#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gft/sampling.hpp"
#include "gft/series.hpp"
#include "test_util.hpp"

using gft::Complex;
using gft::SamplingPolicy;

TEST_CASE("policy validation") {
  CHECK_NOTHROW(SamplingPolicy::defaults().validate());

  SamplingPolicy too_few = SamplingPolicy::defaults();
  too_few.angles_per_circle = 3;
  CHECK_THROWS_AS(too_few.validate(), std::invalid_argument);

  SamplingPolicy outside = SamplingPolicy::defaults();
  outside.radii = {0.5, 0.97};
  CHECK_THROWS_AS(outside.validate(), std::invalid_argument);

  SamplingPolicy empty = SamplingPolicy::defaults();
  empty.radii.clear();
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

  SamplingPolicy bad_rmax = SamplingPolicy::defaults();
  bad_rmax.r_max = 1.0;
  CHECK_THROWS_AS(bad_rmax.validate(), std::invalid_argument);
}

TEST_CASE("make_grid lays out circles radius-major") {
  SamplingPolicy policy = SamplingPolicy::defaults();
  policy.radii = {0.5};
  policy.angles_per_circle = 4;
  const std::vector<Complex> grid = gft::make_grid(policy);
  REQUIRE(grid.size() == 4);
  CHECK(std::abs(grid[0] - Complex(0.5, 0.0)) <= 1e-15);
  CHECK(std::abs(grid[1] - Complex(0.0, 0.5)) <= 1e-15);
  CHECK(std::abs(grid[2] - Complex(-0.5, 0.0)) <= 1e-15);
  CHECK(std::abs(grid[3] - Complex(0.0, -0.5)) <= 1e-15);

  policy.radii = {0.1, 0.2};
  CHECK(gft::make_grid(policy).size() == 8);
}

TEST_CASE("grid_min_real") {
  const std::vector<Complex> grid = gft::make_grid(SamplingPolicy::defaults());

  const gft::ScanExtreme flat =
      gft::grid_min_real([](Complex) { return Complex(1.0, 0.0); }, grid);
  CHECK(flat.value == 1.0);
  CHECK(flat.witness == grid.front());

  // 1/(1-z) has real part (1 - Re z)/|1-z|^2, smallest at z = -0.95.
  const gft::ScanExtreme cauchy = gft::grid_min_real(
      [](Complex z) { return Complex(1.0, 0.0) / (Complex(1.0, 0.0) - z); },
      grid);
  CHECK(std::abs(cauchy.value - 1.0 / 1.95) <= 1e-9);
  CHECK(std::abs(cauchy.witness - Complex(-0.95, 0.0)) <= 1e-9);

  SamplingPolicy small = SamplingPolicy::defaults();
  small.radii = {0.5};
  const gft::ScanExtreme ident = gft::grid_min_real(
      [](Complex z) { return z; }, gft::make_grid(small));
  CHECK(std::abs(ident.value - (-0.5)) <= 1e-12);
}

TEST_CASE("grid_max_modulus") {
  const std::vector<Complex> grid = gft::make_grid(SamplingPolicy::defaults());

  CHECK(gft::grid_max_modulus([](Complex) { return Complex(0.0, 0.0); }, grid)
            .value == 0.0);
  CHECK(std::abs(gft::grid_max_modulus([](Complex z) { return z; }, grid)
                     .value -
                 0.95) <= 1e-15);

  // z/(1-z) peaks at z = 0.95 with modulus 19.
  const gft::ScanExtreme peak = gft::grid_max_modulus(
      [](Complex z) { return z / (Complex(1.0, 0.0) - z); }, grid);
  CHECK(std::abs(peak.value - 19.0) <= 1e-12);
  CHECK(std::abs(peak.witness - Complex(0.95, 0.0)) <= 1e-12);
}

TEST_CASE("grid scans surface non-finite values as evaluation_error") {
  SamplingPolicy policy = SamplingPolicy::defaults();
  policy.radii = {0.5};
  policy.angles_per_circle = 4;
  const std::vector<Complex> grid = gft::make_grid(policy);
  const Complex pole = grid[1];
  const auto blows_up = [pole](Complex z) {
    return Complex(1.0, 0.0) / (z - pole);
  };
  try {
    gft::grid_min_real(blows_up, grid);
    FAIL("expected evaluation_error");
  } catch (const gft::evaluation_error& e) {
    CHECK(std::abs(e.at - pole) == 0.0);
  }
}

TEST_CASE("simpson_integrate") {
  const int steps = 1024;

  CHECK(gft::simpson_integrate([](double) { return 1.0; }, 0.5, steps) ==
        doctest::Approx(0.5).epsilon(1e-14));

  // Integrands of the derivative-bound shape with known antiderivatives:
  // int_0^0.5 (1+t)/(1-t)^3 dt = 2 and int_0^0.5 (1-t)/(1+t)^3 dt = 2/9.
  CHECK(gft::simpson_integrate(
            [](double t) { return (1.0 + t) / std::pow(1.0 - t, 3.0); }, 0.5,
            steps) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(gft::simpson_integrate(
            [](double t) { return (1.0 - t) / std::pow(1.0 + t, 3.0); }, 0.5,
            steps) == doctest::Approx(2.0 / 9.0).epsilon(1e-8));

  // Exact on cubics with the minimal step count.
  const double cubic = gft::simpson_integrate(
      [](double t) { return ((t - 2.0) * t + 3.0) * t - 1.0; }, 0.8, 2);
  const double exact = 0.1024 - 2.0 * 0.512 / 3.0 + 1.5 * 0.64 - 0.8;
  CHECK(std::abs(cubic - exact) <= 1e-14);

  CHECK(gft::simpson_integrate([](double t) { return t; }, 0.0, steps) == 0.0);

  CHECK_THROWS_AS(gft::simpson_integrate([](double) { return 1.0; }, 0.5, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(gft::simpson_integrate(
                      [](double t) { return 1.0 / t; }, 0.5, steps),
                  std::domain_error);
}
