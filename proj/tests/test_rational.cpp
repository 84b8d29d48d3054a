#include <catch2/catch_amalgamated.hpp>

#include "octo/random.hpp"
#include "octo/rational.hpp"

using octo::Rational;

TEST_CASE("rationals are stored in lowest terms", "[rational]") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK((Rational(1, 3) - Rational(1, 3)).denominator() == 1);
}

TEST_CASE("zero denominator and division by zero throw", "[rational]") {
  CHECK_THROWS_AS(Rational(1, 0), octo::ZeroDivision);
  CHECK_THROWS_AS(Rational(1) / Rational(0), octo::ZeroDivision);
  CHECK_THROWS_AS(Rational(0).reciprocal(), octo::ZeroDivision);
}

TEST_CASE("parse and print", "[rational]") {
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("10/4").to_string() == "5/2");
  CHECK(Rational::parse("+7").to_string() == "7");
  CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Rational::parse("3/"), octo::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("1.5"), octo::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse(""), octo::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("2/0"), octo::ZeroDivision);
}

TEST_CASE("ordering", "[rational]") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
}

TEST_CASE("field axioms hold exactly on random triples", "[rational][property]") {
  octo::RandomOctonions rng(11);
  for (int k = 0; k < 500; ++k) {
    const auto a = rng.scalar<Rational>();
    const auto b = rng.scalar<Rational>();
    const auto c = rng.scalar<Rational>();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a - a == Rational(0));
    if (!a.is_zero()) REQUIRE(a * a.reciprocal() == Rational(1));
    // Canonical form survives every operation.
    const auto d = a * b - c / (b.is_zero() ? Rational(1) : b);
    REQUIRE(d.denominator() > 0);
    REQUIRE(boost::multiprecision::gcd(d.numerator(), d.denominator()) == 1);
  }
}
