#include "qortho/rational.hpp"

#include <gtest/gtest.h>

using qortho::RationalNumber;
using qortho::parse_rational;
using qortho::to_fraction_string;

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(parse_rational("6/4"), RationalNumber(3, 2));
  EXPECT_EQ(parse_rational("-7"), RationalNumber(-7));
  EXPECT_EQ(parse_rational("+3/9"), RationalNumber(1, 3));
  EXPECT_EQ(parse_rational("0/5"), RationalNumber(0));
}

TEST(Rational, FractionStringAlwaysHasDenominator) {
  EXPECT_EQ(to_fraction_string(RationalNumber(5)), "5/1");
  EXPECT_EQ(to_fraction_string(RationalNumber(-2, 6)), "-1/3");
}

TEST(Rational, BigValuesRoundTrip) {
  const std::string big = "123456789012345678901234567891/7";
  EXPECT_EQ(to_fraction_string(parse_rational(big)), big);
}

TEST(Rational, RejectsMalformed) {
  for (const char* s : {"", "1/0", "abc", "1/", "/2", "1/-2", "1.5", "--1", "1/2/3"})
    EXPECT_THROW(parse_rational(s), std::invalid_argument) << s;
}
