#include "../common.hpp"

#include <gtest/gtest.h>

using namespace testkit;

namespace {
const RingPtr R = ring({"x", "y"}, 7);
}

TEST(Parse, Examples) {
    const auto f = poly(R, "x - 7*y");
    EXPECT_EQ(f.coeff(Monomial{1, 0}), Rational(1));
    EXPECT_EQ(f.coeff(Monomial{0, 1}), Rational(-7));
    EXPECT_TRUE(poly(R, "0").is_zero());
    EXPECT_EQ(poly(R, "(x+y)^1*1 - y"), poly(R, "x"));
}

TEST(Parse, PrecedenceAndSigns) {
    EXPECT_EQ(poly(R, "-x^2"), -(poly(R, "x") * poly(R, "x")));
    EXPECT_EQ(poly(R, "2*x*y^2*1/2"), poly(R, "x*y^2"));
    EXPECT_EQ(poly(R, "(x - y)^2"), poly(R, "x^2 - 2*x*y + y^2"));
    EXPECT_EQ(poly(R, " + 1/3 *x"), Rational(1, 3) * poly(R, "x"));
    EXPECT_EQ(poly(R, "x^0"), poly(R, "1"));
}

TEST(Parse, Errors) {
    for (const char* bad : {"", "x +", "x ** y", "z", "(x", "x)", "1/0", "x^", "x^y", "3 x", "x^9999999"}) {
        EXPECT_THROW(poly(R, bad), ParseError) << bad;
    }
    try {
        poly(R, "x + q");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(Print, Examples) {
    EXPECT_EQ(to_string(poly(R, "x^2 - x")), "x^2 - x");
    EXPECT_EQ(to_string(poly(R, "y - 1/7*x")), "-1/7*x + y");
    EXPECT_EQ(to_string(poly(R, "0")), "0");
    EXPECT_EQ(to_string(poly(R, "-3")), "-3");
    EXPECT_EQ(to_string(poly(R, "7*y").terms().front(), *R), "7*y");
}

TEST(Print, RoundTripsRandomPolynomials) {
    Rng rng(103);
    for (int i = 0; i < 300; ++i) {
        const auto f = random_poly(rng, R, {6, 5, -2, 3, false});
        EXPECT_EQ(poly(R, to_string(f)), f) << to_string(f);
    }
}

TEST(RationalText, ParseErrorsAreTyped) {
    EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
    EXPECT_THROW(parse_rational("1.5"), ParseError);
}
