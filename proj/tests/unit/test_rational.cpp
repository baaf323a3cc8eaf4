#include <doctest.h>

#include <stdexcept>

#include "hypercore/numeric.hpp"
#include "hypercore/rational.hpp"
#include "test_util.hpp"

using hypercore::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(-10, -5).str() == "2");
  CHECK(Rational(3, 4).num() == 3);
  CHECK(Rational(3, 4).den() == 4);
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("exact arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 7) / Rational(2, 7) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

  hypercore::testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = rng.rational(50, 30), b = rng.nonzero_rational(50, 30);
    CHECK((a / b) * b == a);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("parsing and printing round trip") {
  for (const char* s : {"0", "7", "-7", "3/4", "-22/7"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
}

TEST_CASE("powers, comparisons, sign") {
  CHECK(Rational::pow(Rational(3, 2), 3) == Rational(27, 8));
  CHECK(Rational::pow(Rational(2), -3) == Rational(1, 8));
  CHECK(Rational::pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(Rational::pow(Rational(0), -1), std::invalid_argument);
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(-5).abs() == Rational(5));
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(1, 9).sign() == 1);
}

TEST_CASE("integer combinatorics helpers") {
  CHECK(hypercore::binomial(13, 6) == 1716);
  CHECK(hypercore::binomial(5, -1) == 0);
  CHECK(hypercore::binomial(-2, 0) == 0);
  CHECK(hypercore::binomial(4, 7) == 0);
  CHECK(hypercore::factorial(6) == 720);
  CHECK(hypercore::falling_factorial(5, 2) == 20);
  CHECK(hypercore::falling_factorial(2, 4) == 0);
  CHECK(hypercore::falling_factorial(7, 0) == 1);
}
