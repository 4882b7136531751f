#include <doctest.h>

#include "autocomm/rational.hpp"

using autocomm::Rational;

TEST_CASE("rationals normalize on construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(6, 3).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), autocomm::Error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 3) / Rational(0, 1), autocomm::Error);

  Rational sum(0, 1);
  for (int i = 0; i < 7; ++i) sum += Rational(1, 7);
  CHECK(sum == Rational(1, 1));
}

TEST_CASE("comparisons cross-multiply") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(3, 8) <= Rational(3, 8));
  CHECK(Rational(5, 8) > Rational(1, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
}

TEST_CASE("serialization round-trips") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(7, 1).str() == "7/1");
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK_FALSE(Rational::parse("3").has_value());
  CHECK_FALSE(Rational::parse("3/").has_value());
  CHECK_FALSE(Rational::parse("/4").has_value());
  CHECK_FALSE(Rational::parse("a/b").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
}
