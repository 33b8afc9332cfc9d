#include <doctest.h>

#include "wpvol/rational.hpp"

using namespace wpvol;

TEST_CASE("construction and lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).str_canonical() == "0/1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK((-a).str() == "-1/6");
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(Rational(2).pow(10) == Rational(1024));
  CHECK(Rational(-1, 2).pow(3) == Rational(-1, 8));
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK(Rational::parse_canonical("-3/4") == Rational(-3, 4));
  CHECK_THROWS_AS(Rational::parse_canonical("2/4"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse_canonical("5"), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
  CHECK(Rational::factorial(0) == Rational(1));
  CHECK(Rational::factorial(5) == Rational(120));
  CHECK(Rational::binomial(7, 3) == Rational(35));
  CHECK(Rational::binomial(3, 7) == Rational(0));
}

TEST_CASE("from_double is exact on dyadics") {
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
  CHECK(Rational::from_double(-2.0) == Rational(-2));
}
