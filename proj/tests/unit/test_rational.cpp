#include <doctest.h>

#include "turan4/error.hpp"
#include "turan4/rational.hpp"

using namespace turan4;

TEST_CASE("rationals are reduced with a positive denominator") {
  const Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(r.to_string() == "-3/4");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(10, 5).is_integer());
}

TEST_CASE("arithmetic and ordering") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(-a < b);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parse accepts integers, fractions and decimals") {
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("0.13387") == Rational(13387, 100000));
  CHECK(Rational::parse("0.729885") == Rational(145977, 200000));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("010") == Rational(10));
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("x/2"), Error);
}

TEST_CASE("decimal rendering rounds in the requested direction") {
  const Rational r(538, 765);  // 0.703267973...
  CHECK(r.to_decimal(6, Rounding::Down) == "0.703267");
  CHECK(r.to_decimal(6, Rounding::Up) == "0.703268");
  CHECK(Rational(3987, 5120).to_decimal(6, Rounding::Up) == "0.778711");
  CHECK(Rational(3987, 5120).to_decimal(10, Rounding::Up) == "0.7787109375");
  CHECK(Rational(1, 2).to_decimal(3, Rounding::Up) == "0.500");
  CHECK(Rational(-1, 3).to_decimal(3, Rounding::Down) == "-0.334");
  CHECK(Rational(-1, 3).to_decimal(3, Rounding::Up) == "-0.333");
  CHECK(Rational(5).to_decimal(2, Rounding::Down) == "5.00");
}

TEST_CASE("binomials") {
  CHECK(binomial(std::uint64_t{8}, 4) == 70);
  CHECK(binomial(std::uint64_t{3}, 4) == 0);
  CHECK(binomial(BigInt("1000000000000"), 4) ==
        BigInt("41666666666416666666667124999999999750000000000"));
}
