#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "emn/rational.hpp"

using emn::Rational;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Euler contribution arithmetic for corner sizes (3,3,4,4,5)") {
    Rational phi = Rational(1) - Rational(5, 2) + Rational(1, 3) + Rational(1, 3) +
                   Rational(1, 4) + Rational(1, 4) + Rational(1, 5);
    CHECK(phi == Rational(-2, 15));
    CHECK(phi.str() == "-2/15");
}

TEST_CASE("comparisons are exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(22, 5) > Rational(4));
    CHECK(Rational(2, 4) >= Rational(1, 2));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 3) != Rational(7, 4));
}

TEST_CASE("floor rounds toward minus infinity") {
    CHECK(Rational(22, 5).floor() == 4);
    CHECK(Rational(24, 5).floor() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(-6, 3).floor() == -2);
    CHECK(Rational(0).floor() == 0);
}

TEST_CASE("overflow raises instead of wrapping") {
    Rational big(INT64_MAX);
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
    CHECK_THROWS_AS(Rational(1, INT64_MAX) + Rational(1, INT64_MAX - 1),
                    std::overflow_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    // near the edge but reducible stays fine
    CHECK(Rational(INT64_MAX, INT64_MAX) == Rational(1));
}

TEST_CASE("mixed expression chains stay exact") {
    Rational x;
    for (int f = 1; f <= 12; ++f) x += Rational(1, f);
    CHECK(x == Rational(86021, 27720));
    x -= Rational(86021, 27720);
    CHECK(x == Rational(0));
}
