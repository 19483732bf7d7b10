#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include <fracton/errors.hpp>
#include <fracton/rational.hpp>

using fracton::bigint;
using fracton::Ratio;

TEST_CASE("construction normalizes sign and common factors", "[rational]") {
  REQUIRE(Ratio(2, 4) == Ratio(1, 2));
  REQUIRE(Ratio(3, -6) == Ratio(-1, 2));
  REQUIRE(Ratio(-3, -6) == Ratio(1, 2));
  REQUIRE(Ratio(0, 5) == Ratio(0));
  REQUIRE(Ratio(0, 5).den() == 1);
  REQUIRE(Ratio(7).is_integer());
  REQUIRE(Ratio(9, 3).is_integer());
  REQUIRE_THROWS_AS(Ratio(1, 0), fracton::domain_error);
}

TEST_CASE("parse accepts p and p/q and rejects everything else", "[rational]") {
  REQUIRE(Ratio::parse("7/3") == Ratio(7, 3));
  REQUIRE(Ratio::parse("-7/3") == Ratio(-7, 3));
  REQUIRE(Ratio::parse("+4") == Ratio(4));
  REQUIRE(Ratio::parse("12") == Ratio(12));
  REQUIRE(Ratio::parse("10/4") == Ratio(5, 2));
  for (const char* bad : {"", "1/", "/2", "a/b", "1 /2", "1/2/3", "1.5", "--2",
                          "2//3", " 1", "1/0"})
    REQUIRE_THROWS_AS(Ratio::parse(bad), fracton::domain_error);
}

TEST_CASE("field arithmetic on small fractions", "[rational]") {
  REQUIRE(Ratio(1, 2) + Ratio(1, 3) == Ratio(5, 6));
  REQUIRE(Ratio(1, 2) - Ratio(1, 3) == Ratio(1, 6));
  REQUIRE(Ratio(2, 3) * Ratio(3, 4) == Ratio(1, 2));
  REQUIRE(Ratio(1, 2) / Ratio(3, 4) == Ratio(2, 3));
  REQUIRE(-Ratio(1, 2) == Ratio(-1, 2));
  REQUIRE_THROWS_AS(Ratio(1, 2) / Ratio(0), fracton::domain_error);
}

TEST_CASE("floor rounds toward minus infinity", "[rational]") {
  REQUIRE(Ratio(7, 3).floor() == 2);
  REQUIRE(Ratio(-7, 3).floor() == -3);
  REQUIRE(Ratio(6, 3).floor() == 2);
  REQUIRE(Ratio(-6, 3).floor() == -2);
  REQUIRE(Ratio(0).floor() == 0);
}

TEST_CASE("ordering is the rational-number order", "[rational]") {
  REQUIRE(Ratio(1, 3) < Ratio(2, 5));
  REQUIRE(Ratio(2, 5) < Ratio(1, 2));
  REQUIRE(Ratio(-1, 2) < Ratio(1, 3));
  REQUIRE(Ratio(3, 7) <= Ratio(3, 7));
  REQUIRE(Ratio(5, 4) > Ratio(1));
}

TEST_CASE("mediant of unimodular neighbours lands between them", "[rational]") {
  REQUIRE(Ratio::mediant(Ratio(1, 3), Ratio(1, 2)) == Ratio(2, 5));
  REQUIRE(Ratio::mediant(Ratio(0), Ratio(1)) == Ratio(1, 2));
}

TEST_CASE("printing round-trips through parse", "[rational]") {
  REQUIRE(Ratio(5, 3).str() == "5/3");
  REQUIRE(Ratio(-5, 3).str() == "-5/3");
  REQUIRE(Ratio(4).str() == "4");
  std::ostringstream os;
  os << Ratio(22, 7);
  REQUIRE(os.str() == "22/7");

  std::mt19937 rng(20260818);
  std::uniform_int_distribution<int> num(-5000, 5000);
  std::uniform_int_distribution<int> den(1, 5000);
  for (int i = 0; i < 500; ++i) {
    const Ratio r(num(rng), den(rng));
    REQUIRE(Ratio::parse(r.str()) == r);
  }
}

TEST_CASE("to_double agrees with long division", "[rational]") {
  REQUIRE(Ratio(1, 2).to_double() == 0.5);
  REQUIRE(Ratio(1, 3).to_double() == Catch::Approx(1.0 / 3.0).epsilon(1e-15));
  REQUIRE(Ratio(-22, 7).to_double() ==
          Catch::Approx(-22.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("arithmetic laws hold on random fractions", "[rational]") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(-300, 300);
  std::uniform_int_distribution<int> den(1, 300);
  for (int i = 0; i < 400; ++i) {
    const Ratio a(num(rng), den(rng));
    const Ratio b(num(rng), den(rng));
    const Ratio c(num(rng), den(rng));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b - b == a);
    if (!b.is_zero()) REQUIRE(a / b * b == a);
    REQUIRE(Ratio(a.floor()) <= a);
    REQUIRE(a < Ratio(a.floor() + 1));
  }
}

TEST_CASE("arbitrary precision survives huge operands", "[rational]") {
  const Ratio big = Ratio::parse("123456789012345678901234567890/7");
  REQUIRE(big * Ratio(7) == Ratio::parse("123456789012345678901234567890"));
  const Ratio x(bigint("999999999999999999999999999999"), bigint(2));
  REQUIRE((x + x).is_integer());
  REQUIRE((x - x).is_zero());
}
