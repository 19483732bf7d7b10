#include <cmath>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <fracton/distribution.hpp>
#include <fracton/errors.hpp>
#include <fracton/format.hpp>

#include "oracles.hpp"

using fracton::occupation;
using fracton::partition_theta;
using fracton::solve_Y;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  return fracton::make_grid({lo, hi, n, true});
}

}  // namespace

TEST_CASE("fermion and boson limits reduce to the textbook forms",
          "[distribution]") {
  for (double xi : log_grid(1e-3, 1e3, 50))
    REQUIRE(occupation(1.0, xi) ==
            Catch::Approx(oracle::fermi_occupation(xi)).margin(1e-14));
  for (double xi : log_grid(1.0 + 1e-3, 1e3, 50))
    REQUIRE(occupation(2.0, xi) ==
            Catch::Approx(oracle::bose_occupation(xi)).epsilon(1e-12));
}

TEST_CASE("the self-dual class has the square-root closed form",
          "[distribution]") {
  for (double xi : log_grid(1e-3, 1e3, 50))
    REQUIRE(occupation(1.5, xi) ==
            Catch::Approx(oracle::semion_occupation(xi)).epsilon(1e-12));
}

TEST_CASE("solver spot checks against frozen high-precision values",
          "[distribution]") {
  REQUIRE(solve_Y(1.3, 7.0) ==
          Catch::Approx(oracle::frozen::Y_13_7).epsilon(1e-14));
  REQUIRE(occupation(1.3, 7.0) ==
          Catch::Approx(oracle::frozen::n_13_7).epsilon(1e-13));
  REQUIRE(partition_theta(1.3, 7.0) ==
          Catch::Approx(oracle::frozen::theta_13_7).epsilon(1e-13));

  REQUIRE(solve_Y(1.7, 0.01) ==
          Catch::Approx(oracle::frozen::Y_17_centi).epsilon(1e-14));
  REQUIRE(occupation(1.7, 0.01) ==
          Catch::Approx(oracle::frozen::n_17_centi).epsilon(1e-13));
  REQUIRE(partition_theta(1.7, 0.01) ==
          Catch::Approx(oracle::frozen::theta_17_centi).epsilon(1e-12));

  REQUIRE(solve_Y(1.5, 1.0) ==
          Catch::Approx(oracle::frozen::Y_32_unit).epsilon(1e-14));
  REQUIRE(occupation(1.5, 1.0) ==
          Catch::Approx(oracle::frozen::n_32_unit).epsilon(1e-14));
  REQUIRE(partition_theta(1.5, 1.0) ==
          Catch::Approx(oracle::frozen::theta_32_unit).epsilon(1e-14));
}

TEST_CASE("random points agree with the bisection oracle", "[distribution]") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> pick_h(1.0, 2.0);
  for (int i = 0; i < 400; ++i) {
    const double h = pick_h(rng);
    // Stay above the underflow knee of the reference bracket: below
    // log xi = -32*(2-h) the complement saturates to 1 in doubles.
    const double floor_log_xi = std::max(-13.0, -25.0 * (2.0 - h));
    std::uniform_real_distribution<double> pick_log_xi(floor_log_xi, 13.0);
    const double log_xi = pick_log_xi(rng);
    const double xi = std::exp(log_xi);
    const double n = occupation(h, xi);
    const double n_ref = oracle::occupation(h, log_xi);
    REQUIRE(n == Catch::Approx(n_ref).epsilon(5e-11));
    REQUIRE(partition_theta(h, xi) ==
            Catch::Approx(oracle::theta(h, log_xi)).margin(5e-11));
  }
}

TEST_CASE("the solution satisfies the defining product equation",
          "[distribution]") {
  for (double h : {1.0, 1.2, 1.5, 1.8, 2.0})
    for (double xi : log_grid(1.2, 50.0, 9)) {
      const double Y = solve_Y(h, xi);
      REQUIRE(Y > 2.0);
      const double product =
          std::pow(Y - 1.0, h - 1.0) * std::pow(Y - 2.0, 2.0 - h);
      REQUIRE(product == Catch::Approx(xi).epsilon(1e-10));
      REQUIRE(occupation(h, xi) == Catch::Approx(1.0 / (Y - h)).epsilon(1e-12));
      const double theta = partition_theta(h, xi);
      REQUIRE(theta == Catch::Approx((Y - 2.0) / (Y - 1.0)).margin(1e-12));
    }
}

TEST_CASE("occupation is monotone decreasing in fugacity", "[distribution]") {
  for (double h : {1.0, 1.25, 1.5, 1.75, 2.0}) {
    double previous = -1.0;
    for (double xi : log_grid(1.001, 1e4, 40)) {
      const double n = occupation(h, xi);
      if (previous >= 0.0) REQUIRE(n < previous);
      previous = n;
    }
  }
}

TEST_CASE("degenerate limit saturates the class cap", "[distribution]") {
  for (double h : {1.0, 1.3, 1.5, 1.7, 1.9})
    REQUIRE(occupation(h, 1e-8) ==
            Catch::Approx(1.0 / (2.0 - h)).margin(1e-6));
}

TEST_CASE("dilute limit matches Boltzmann decay", "[distribution]") {
  for (double h : {1.0, 1.5, 2.0})
    REQUIRE(occupation(h, 1e6) == Catch::Approx(1e-6).epsilon(1e-4));
}

TEST_CASE("finite-difference occupation from the partition function",
          "[distribution]") {
  for (double h : {1.0, 1.25, 1.5, 1.75, 1.95})
    for (double xi : log_grid(1e-2, 1e2, 9))
      REQUIRE(fracton::occupation_via_theta(h, xi) ==
              Catch::Approx(occupation(h, xi)).margin(1e-6));
}

TEST_CASE("free energy is the tempered log partition function",
          "[distribution]") {
  REQUIRE(fracton::free_energy(1.5, 1.0, 2.0) ==
          Catch::Approx(oracle::frozen::free_energy_32_1_2).epsilon(1e-13));
  for (double xi : {0.5, 1.0, 4.0})
    REQUIRE(fracton::free_energy(1.4, xi, 3.0) ==
            Catch::Approx(3.0 * fracton::log_partition_theta(1.4, xi))
                .epsilon(1e-14));
  REQUIRE_THROWS_AS(fracton::free_energy(1.5, 1.0, 0.0),
                    fracton::domain_error);
  REQUIRE_THROWS_AS(fracton::free_energy(1.5, 1.0, -1.0),
                    fracton::domain_error);
}

TEST_CASE("domain violations are rejected with diagnostics", "[distribution]") {
  REQUIRE_THROWS_AS(occupation(0.5, 1.0), fracton::domain_error);
  REQUIRE_THROWS_AS(occupation(2.5, 1.0), fracton::domain_error);
  REQUIRE_THROWS_AS(occupation(1.5, 0.0), fracton::domain_error);
  REQUIRE_THROWS_AS(occupation(1.5, -2.0), fracton::domain_error);
  REQUIRE_THROWS_AS(occupation(1.5, std::nan("")), fracton::domain_error);
  REQUIRE_THROWS_AS(occupation(2.0, 1.0), fracton::domain_error);
  REQUIRE_THROWS_AS(occupation(2.0, 0.5), fracton::domain_error);
  REQUIRE_THROWS_WITH(occupation(2.0, 0.9),
                      Catch::Matchers::ContainsSubstring("unphysical"));
}
