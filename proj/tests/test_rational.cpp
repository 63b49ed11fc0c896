#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycloschur/rational.hpp"

using cycloschur::DivisionByZero;
using cycloschur::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-6, -3) == Rational(2));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((a + b) - b == a);
  CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
}

TEST_CASE("pow and rendering") {
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(2, 3).str() == "2/3");
  CHECK(Rational(-5).str() == "-5");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}
