#include <doctest.h>

#include "pcsp/rational.hpp"

using namespace pcsp;

TEST_CASE("rational parsing accepts integers and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_rational("2/0"), SchemaError);
  CHECK_THROWS_AS(parse_rational(""), SchemaError);
  CHECK_THROWS_AS(parse_rational("1.5"), SchemaError);
  CHECK_THROWS_AS(parse_rational("a/b"), SchemaError);
  CHECK_THROWS_AS(parse_rational("1/"), SchemaError);
}

TEST_CASE("rational formatting is canonical") {
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK(rational_to_string(Rational(-10, 4)) == "-5/2");
  CHECK(rational_to_string(parse_rational("0/9")) == "0");
}

TEST_CASE("abs helpers") {
  std::vector<Rational> values{Rational(1), Rational(-3), Rational(1, 2)};
  CHECK(abs_sum(values) == Rational(9, 2));
  CHECK(max_abs(values) == Rational(3));
}
