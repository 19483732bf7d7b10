#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include <fracton/errors.hpp>
#include <fracton/fractal_index.hpp>

#include "oracles.hpp"

using fracton::fractal_index;

TEST_CASE("endpoints of the topological correspondence", "[fractal-index]") {
  const fracton::FractalIndex fermion = fractal_index(1.0);
  REQUIRE(fermion.value == Catch::Approx(0.5).margin(1e-9));
  REQUIRE(fermion.abs_error_estimate <= 1e-9);

  const fracton::FractalIndex boson = fractal_index(2.0);
  REQUIRE(boson.value == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("the self-dual class sits at three fifths", "[fractal-index]") {
  REQUIRE(fractal_index(1.5).value == Catch::Approx(0.6).margin(1e-9));
}

TEST_CASE("interior values match the frozen constants", "[fractal-index]") {
  REQUIRE(fractal_index(5.0 / 3.0).value ==
          Catch::Approx(oracle::frozen::index_5_3).margin(2e-9));
  REQUIRE(fractal_index(7.0 / 4.0).value ==
          Catch::Approx(oracle::frozen::index_7_4).margin(2e-9));
  REQUIRE(fractal_index(9.0 / 5.0).value ==
          Catch::Approx(oracle::frozen::index_9_5).margin(2e-9));
  REQUIRE(fractal_index(11.0 / 6.0).value ==
          Catch::Approx(oracle::frozen::index_11_6).margin(2e-9));
}

TEST_CASE("independent Simpson route over the fugacity logarithm agrees",
          "[fractal-index]") {
  for (double h : {1.1, 1.25, 1.5, 1.6, 1.85})
    REQUIRE(fractal_index(h).value ==
            Catch::Approx(oracle::fractal_index(h)).margin(1e-8));
}

TEST_CASE("closed form through the dilogarithm agrees", "[fractal-index]") {
  for (double h : {1.0, 1.2, 1.4, 1.5, 1.7, 1.9})
    REQUIRE(fractal_index(h).value ==
            Catch::Approx(oracle::fractal_index_closed(h)).margin(5e-9));
}

TEST_CASE("the index grows monotonically with the dimension",
          "[fractal-index]") {
  double previous = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double h = 1.0 + i / 20.0;
    const double value = fractal_index(h).value;
    REQUIRE(value > previous);
    REQUIRE(value >= 0.5 - 1e-9);
    REQUIRE(value <= 1.0 + 1e-9);
    previous = value;
  }
}

TEST_CASE("the reported error bound covers the observed error",
          "[fractal-index]") {
  const struct {
    double h;
    double truth;
  } cases[] = {{5.0 / 3.0, oracle::frozen::index_5_3},
               {7.0 / 4.0, oracle::frozen::index_7_4},
               {9.0 / 5.0, oracle::frozen::index_9_5}};
  for (const auto& c : cases) {
    const fracton::FractalIndex result = fractal_index(c.h);
    REQUIRE(std::fabs(result.value - c.truth) <=
            std::max(result.abs_error_estimate, 1e-12));
  }
}

TEST_CASE("an unreachable tolerance raises a convergence error",
          "[fractal-index]") {
  bool threw = false;
  try {
    fractal_index(1.5, 1e-30);
  } catch (const fracton::convergence_error& e) {
    threw = true;
    REQUIRE(e.achieved_error() > 1e-30);
  }
  REQUIRE(threw);
}

TEST_CASE("dimensions outside the class range are rejected",
          "[fractal-index]") {
  REQUIRE_THROWS_AS(fractal_index(0.9), fracton::domain_error);
  REQUIRE_THROWS_AS(fractal_index(2.1), fracton::domain_error);
}
