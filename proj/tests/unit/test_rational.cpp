#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lieharm/rational.hpp"

using lieharm::Rational;

TEST(Rational, ReducesAndNormalizesSign) {
  const Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_THROW(a / Rational(0), std::exception);
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  EXPECT_THROW(big * Rational(4), std::overflow_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(*Rational::parse("-2/6"), Rational(-1, 3));
  EXPECT_EQ(*Rational::parse("5"), Rational(5));
  EXPECT_FALSE(Rational::parse("1/0"));
  EXPECT_FALSE(Rational::parse("x/2"));
  EXPECT_FALSE(Rational::parse(""));
}

TEST(Rational, Snap) {
  EXPECT_EQ(*lieharm::snap_rational(1.0 / 12.0 + 1e-9, 48, 1e-6), Rational(1, 12));
  EXPECT_EQ(*lieharm::snap_rational(-0.5, 48, 1e-9), Rational(-1, 2));
  EXPECT_FALSE(lieharm::snap_rational(std::sqrt(2.0), 48, 1e-9));
}
