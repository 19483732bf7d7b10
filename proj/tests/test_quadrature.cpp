#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include <fracton/quadrature.hpp>

using fracton::integrate;

TEST_CASE("smooth integrals hit analytic values", "[quadrature]") {
  const auto sine = integrate([](double x) { return std::sin(x); }, 0.0,
                              3.14159265358979323846, 1e-12);
  REQUIRE(sine.converged);
  REQUIRE(sine.value == Catch::Approx(2.0).margin(1e-12));

  const auto cubic = integrate([](double x) { return x * x * x; }, -1.0, 2.0,
                               1e-12);
  REQUIRE(cubic.value == Catch::Approx(15.0 / 4.0).margin(1e-12));
}

TEST_CASE("a single panel is exact for degree-13 polynomials", "[quadrature]") {
  const auto poly = integrate([](double x) { return std::pow(x, 12); }, 0.0,
                              1.0, 1e-12);
  REQUIRE(poly.intervals == 1);
  REQUIRE(poly.value == Catch::Approx(1.0 / 13.0).epsilon(1e-14));
}

TEST_CASE("integrable endpoint singularities converge under refinement",
          "[quadrature]") {
  const auto log_singular = integrate(
      [](double x) {
        if (x <= 0.0) x = std::nextafter(0.0, 1.0);
        return -std::log(x);
      },
      0.0, 1.0, 1e-9, 4000);
  REQUIRE(log_singular.converged);
  REQUIRE(log_singular.intervals > 1);
  REQUIRE(log_singular.value == Catch::Approx(1.0).margin(1e-8));
}

TEST_CASE("sharp peaks are resolved and the error estimate is honest",
          "[quadrature]") {
  const double a = 1e-3;
  const auto peak = integrate(
      [&](double x) {
        const double d = x - 0.5;
        return 1.0 / (a * a + d * d);
      },
      0.0, 1.0, 1e-9, 4000);
  const double truth = 2.0 / a * std::atan(0.5 / a);
  REQUIRE(peak.converged);
  REQUIRE(peak.intervals > 4);
  REQUIRE(std::fabs(peak.value - truth) <= std::max(peak.abs_error, 1e-9));
}

TEST_CASE("an exhausted interval budget is reported, not hidden",
          "[quadrature]") {
  const auto starved = integrate([](double x) { return std::sin(50.0 * x); },
                                 0.0, 10.0, 1e-15, 3);
  REQUIRE_FALSE(starved.converged);
  REQUIRE(starved.abs_error > 1e-15);
}

TEST_CASE("results are bitwise deterministic", "[quadrature]") {
  const auto f = [](double x) { return std::exp(-x) * std::cos(7.0 * x); };
  const auto first = integrate(f, 0.0, 5.0, 1e-11);
  const auto second = integrate(f, 0.0, 5.0, 1e-11);
  REQUIRE(first.value == second.value);
  REQUIRE(first.abs_error == second.abs_error);
  REQUIRE(first.intervals == second.intervals);
}

TEST_CASE("degenerate and oriented ranges behave", "[quadrature]") {
  const auto empty = integrate([](double) { return 1.0; }, 2.0, 2.0, 1e-12);
  REQUIRE(empty.value == 0.0);

  const auto unit = integrate([](double) { return 1.0; }, 0.0, 3.0, 1e-12);
  REQUIRE(unit.value == Catch::Approx(3.0).epsilon(1e-15));
}
