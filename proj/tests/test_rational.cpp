#include <gtest/gtest.h>

#include "pvm/rational.hpp"

using pvm::parse_rational;
using pvm::Rational;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("+4"), Rational(4));
    EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("0.5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational(" 5/3 "), Rational(5, 3));
}

TEST(Rational, DecimalsAreExact) {
    // 0.1 has no finite binary expansion
    EXPECT_EQ(parse_rational("0.1") * 10, Rational(1));
    EXPECT_EQ(parse_rational("123456789012345678901234567890.000000000000000000001"),
              Rational(pvm::Integer("123456789012345678901234567890000000000000000000001"),
                       boost::multiprecision::pow(pvm::Integer(10), 21)));
}

TEST(Rational, RejectsMalformedInput) {
    for (const char* bad : {"", " ", "abc", "1/0", "1/-2", "1.", "1..2", "--1", "1/2/3", "1e3", "0x10", "1.-5"})
        EXPECT_THROW(parse_rational(bad), pvm::ParseError) << bad;
}

TEST(Rational, ParsesLists) {
    auto v = pvm::parse_rational_list("0,-1/2,0");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[1], Rational(-1, 2));
    EXPECT_EQ(pvm::parse_rational_list("3").size(), 1u);
    EXPECT_THROW(pvm::parse_rational_list("1,,2"), pvm::ParseError);
    EXPECT_THROW(pvm::parse_rational_list("1,2,"), pvm::ParseError);
}

TEST(Rational, Predicates) {
    EXPECT_TRUE(pvm::is_integer(Rational(4, 2)));
    EXPECT_FALSE(pvm::is_integer(Rational(1, 2)));
    EXPECT_TRUE(pvm::is_natural(Rational(1)));
    EXPECT_FALSE(pvm::is_natural(Rational(0)));
    EXPECT_TRUE(pvm::is_nonneg_integer(Rational(0)));
    EXPECT_FALSE(pvm::is_nonneg_integer(Rational(-1)));
    EXPECT_EQ(pvm::to_string(Rational(-6, 4)), "-3/2");
    EXPECT_EQ(pvm::to_string(Rational(5)), "5");
}
