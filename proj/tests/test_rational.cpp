#include <doctest.h>

#include <mapfold/rational.hpp>

using mapfold::Rat;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-5) < Rat(-4, 3));
  CHECK(Rat(7, 3).str() == "7/3");
  CHECK(Rat(-4, 2).str() == "-2");
}

TEST_CASE("rational parsing") {
  CHECK(Rat::parse("3/2") == Rat(3, 2));
  CHECK(Rat::parse("-3/2") == Rat(-3, 2));
  CHECK(Rat::parse("42") == Rat(42));
  CHECK(Rat::parse("1.5") == Rat(3, 2));
  CHECK(Rat::parse("-0.25") == Rat(-1, 4));
  CHECK_THROWS_AS(Rat::parse("1/0"), mapfold::ParseError);
  CHECK_THROWS_AS(Rat::parse("abc"), mapfold::ParseError);
  CHECK_THROWS_AS(Rat::parse(""), mapfold::ParseError);
}

TEST_CASE("overflow is detected, never wrapped") {
  Rat big(INT64_MAX);
  CHECK_THROWS_AS(big + Rat(1), mapfold::OverflowError);
  CHECK_THROWS_AS(big * Rat(2), mapfold::OverflowError);
  CHECK(Rat(INT64_MAX) > Rat(INT64_MAX - 1));
  CHECK(Rat(INT64_MAX - 1, INT64_MAX) < Rat(1));
}

TEST_CASE("exactness on awkward fractions") {
  Rat a(1, 3), b(333333333, 1000000000);
  CHECK(a > b);
  CHECK(a - b == Rat(1, 3000000000LL));
}
