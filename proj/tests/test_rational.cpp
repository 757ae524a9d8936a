#include "kpareto/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace kpareto;

TEST_CASE("parse_rational accepts fractions, integers, and decimals") {
  CHECK(parse_rational("22/7") == Rational(22, 7));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("1000000") == Rational(1000000));
  CHECK(parse_rational("4/6") == Rational(2, 3));  // normalized
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
}

TEST_CASE("fraction_string is canonical") {
  CHECK(fraction_string(Rational(2, 3)) == "2/3");
  CHECK(fraction_string(Rational(4, 6)) == "2/3");
  CHECK(fraction_string(Rational(3)) == "3/1");
  CHECK(fraction_string(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("rational_pow is exact") {
  CHECK(rational_pow(Rational(5, 2), 3) == Rational(125, 8));
  CHECK(rational_pow(Rational(2, 3), 0) == Rational(1));
  // (8/3)^20 exceeds 64-bit numerators; exactness must survive.
  const Rational big = rational_pow(Rational(8, 3), 20);
  CHECK(big == Rational(BigInt("1152921504606846976"), BigInt("3486784401")));
}

TEST_CASE("rational_from_double is the exact binary value") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(0.1) == Rational(BigInt("3602879701896397"), BigInt(1) << 55));
  CHECK(rational_from_double(-3.0) == Rational(-3));
  CHECK_THROWS_AS(rational_from_double(1.0 / 0.0), std::invalid_argument);
}

TEST_CASE("directed rounding brackets the rational") {
  const Rational third(1, 3);
  const double up = to_double_round_up(third);
  const double down = to_double_round_down(third);
  CHECK(rational_from_double(up) >= third);
  CHECK(rational_from_double(down) <= third);
  CHECK(up - down <= 0x1.0p-52);

  // Representable values round to themselves in both directions.
  CHECK(to_double_round_up(Rational(3, 4)) == 0.75);
  CHECK(to_double_round_down(Rational(3, 4)) == 0.75);
}

TEST_CASE("rational_ceil matches integer ceiling") {
  CHECK(rational_ceil(Rational(5, 2)) == 3);
  CHECK(rational_ceil(Rational(2)) == 2);
  CHECK(rational_ceil(Rational(1, 8)) == 1);
  CHECK(rational_ceil(Rational(-5, 2)) == -2);
  CHECK(rational_ceil(Rational(0)) == 0);
}

TEST_CASE("checked_int64 guards the 64-bit range") {
  CHECK(checked_int64(BigInt(42), "x") == 42);
  CHECK_THROWS_AS(checked_int64(BigInt(1) << 70, "x"), std::overflow_error);
}
