#include <gtest/gtest.h>

#include <stdexcept>

#include "coxfree/scalar.hpp"

using coxfree::Scalar;

TEST(Scalar, RationalArithmeticIsCanonical) {
  EXPECT_EQ(Scalar(2, 4), Scalar(1, 2));
  EXPECT_EQ(Scalar(1, 3) + Scalar(1, 6), Scalar(1, 2));
  EXPECT_EQ(Scalar(-4, 3).to_string(), "-4/3");
  EXPECT_EQ((Scalar(3, 7) * Scalar(7, 3)), Scalar(1));
  EXPECT_TRUE((Scalar(5) - Scalar(5)).is_zero());
}

TEST(Scalar, GoldenRatio) {
  const Scalar s5 = Scalar::sqrt_of(5);
  const Scalar phi = (Scalar(1) + s5) / Scalar(2);
  EXPECT_EQ(phi * phi, phi + Scalar(1));
  EXPECT_EQ(s5 * s5, Scalar(5));
  EXPECT_TRUE((s5 * s5).is_rational());
  EXPECT_EQ(phi * phi.inverse(), Scalar(1));
}

TEST(Scalar, ParseRoundTrip) {
  for (const char* text : {"0", "-4/3", "7", "1/2+3/4*sqrt(5)", "-1/2-sqrt(5)", "2*sqrt(5)", "+3/5"}) {
    const Scalar s = Scalar::parse(text);
    EXPECT_EQ(Scalar::parse(s.to_string()), s) << text;
  }
  EXPECT_EQ(Scalar::parse("1/2+3/4*sqrt(5)"), Scalar(mpq_class(1, 2), mpq_class(3, 4), 5));
  EXPECT_THROW(Scalar::parse("abc"), std::invalid_argument);
}

TEST(Scalar, ExactSign) {
  const Scalar s5 = Scalar::sqrt_of(5);
  EXPECT_EQ((Scalar(2) - s5).sign(), -1);
  EXPECT_EQ((Scalar(9, 4) - s5).sign(), 1);
  EXPECT_EQ((s5 - Scalar(2)).sign(), 1);
  EXPECT_LT(Scalar(2), s5);
  EXPECT_GT(Scalar(9, 4), s5);
  EXPECT_EQ(Scalar(0).sign(), 0);
}

TEST(Scalar, MixedRadicandsAreRejected) {
  EXPECT_THROW(Scalar::sqrt_of(5) + Scalar::sqrt_of(2), std::domain_error);
  EXPECT_NO_THROW(Scalar::sqrt_of(5) + Scalar(1, 2));
  EXPECT_NO_THROW(Scalar::sqrt_of(2) * Scalar::sqrt_of(2) + Scalar::sqrt_of(5));
}

TEST(Scalar, SquareFree) {
  EXPECT_TRUE(coxfree::is_square_free(5));
  EXPECT_TRUE(coxfree::is_square_free(2));
  EXPECT_FALSE(coxfree::is_square_free(12));
  EXPECT_FALSE(coxfree::is_square_free(9));
}

TEST(Scalar, InverseOfZeroThrows) { EXPECT_ANY_THROW(Scalar(0).inverse()); }
