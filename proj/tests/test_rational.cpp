#include <doctest.h>

#include "subkdom/rational.hpp"

using subkdom::ceil_div;
using subkdom::DomainError;
using subkdom::Rational;

TEST_CASE("rational normalization") {
    CHECK(Rational(6, 9) == Rational(2, 3));
    CHECK(Rational(-6, 9) == Rational(-2, 3));
    CHECK(Rational(6, -9) == Rational(-2, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(7, 1).den == 1);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational arithmetic and comparison") {
    CHECK(Rational(7, 3) - Rational(9, 5) == Rational(8, 15));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(9, 5));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(4, 2) == Rational(2));
    CHECK(Rational(5, 3) > Rational(1));
}

TEST_CASE("floor and ceil for both signs") {
    CHECK(Rational(7, 3).ceil() == 3);
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).ceil() == -2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(6, 3).ceil() == 2);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(0).ceil() == 0);
}

TEST_CASE("string form") {
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(102, 3).str() == "34");
    CHECK(Rational(-8, 15).str() == "-8/15");
}

TEST_CASE("ceil_div") {
    CHECK(ceil_div(10, 4) == 3);
    CHECK(ceil_div(12, 4) == 3);
    CHECK(ceil_div(1, 5) == 1);
    CHECK(ceil_div(0, 5) == 0);
    CHECK(ceil_div(-7, 2) == -3);
}
