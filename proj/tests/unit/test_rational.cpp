#include <gtest/gtest.h>

#include "trisym/numeric/errors.hpp"
#include "trisym/numeric/rational.hpp"

using trisym::InvalidArgument;
using trisym::Rational;

TEST(Rational, ParseReducesToLowestTerms) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-2/4").str(), "-1/2");
  EXPECT_EQ(Rational::parse("2/-4"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse(" 7 ").str(), "7");
  EXPECT_EQ(Rational::parse("+5/10"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("0/9").den(), 1);
}

TEST(Rational, ParseDecimalAndScientific) {
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-1.5e1"), Rational(-15));
  EXPECT_EQ(Rational::parse("1e-20"), Rational(1) / Rational(10).pow(20));
  EXPECT_EQ(Rational::parse("2E3"), Rational(2000));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "1/x", "abc", "1//2", "-", "1e", "1e99999", "."}) {
    EXPECT_THROW(Rational::parse(bad), InvalidArgument) << bad;
  }
}

TEST(Rational, ZeroDenominatorAndInverse) {
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
  EXPECT_THROW(Rational(0).inverse(), InvalidArgument);
  EXPECT_THROW(Rational(1) / Rational(0), InvalidArgument);
  EXPECT_EQ(Rational(-3, 4).inverse(), Rational(-4, 3));
}

TEST(Rational, WireAlwaysHasDenominator) {
  EXPECT_EQ(Rational(3).wire(), "3/1");
  EXPECT_EQ(Rational(0).wire(), "0/1");
  EXPECT_EQ(Rational(-7, 21).wire(), "-1/3");
}

TEST(Rational, DecimalRoundsHalfAwayFromZero) {
  EXPECT_EQ(Rational(2, 3).to_decimal(3), "0.667");
  EXPECT_EQ(Rational(-1, 8).to_decimal(2), "-0.13");
  EXPECT_EQ(Rational(1, 8).to_decimal(2), "0.13");
  EXPECT_EQ(Rational(1, 3).to_decimal(0), "0");
  EXPECT_EQ(Rational(-1, 1000).to_decimal(2), "0.00");
  EXPECT_EQ(Rational(5).to_decimal(2), "5.00");
}

TEST(Rational, Pow2AndLog2) {
  EXPECT_EQ(Rational::pow2(-3), Rational(1, 8));
  EXPECT_EQ(Rational::pow2(10), Rational(1024));
  EXPECT_EQ(Rational(1, 8).ilog2_abs(), -3);
  EXPECT_EQ(Rational(3, 8).ilog2_abs(), -2);
  EXPECT_EQ(Rational(-1000).ilog2_abs(), 9);
}

TEST(Rational, FieldLaws) {
  const Rational a(3, 7), b(-5, 11), c(2, 9);
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a - a, Rational(0));
  EXPECT_LT(b, c);
  EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
}
