#include <gtest/gtest.h>

#include <stdexcept>

#include "ein2/scalar.hpp"

namespace ein2 {
namespace {

TEST(Scalar, ParsesIntegersFractionsAndDecimalsExactly) {
  EXPECT_EQ(Scalar::parse("3").rational(), Rational(3));
  EXPECT_EQ(Scalar::parse("-6/4").rational(), Rational(-3, 2));
  EXPECT_EQ(Scalar::parse("1.25").rational(), Rational(5, 4));
  EXPECT_EQ(Scalar::parse("3e-2").rational(), Rational(3, 100));
  EXPECT_TRUE(Scalar::parse("0.1").is_exact());
}

TEST(Scalar, RejectsMalformedText) {
  EXPECT_THROW(Scalar::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse(""), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("1/0"), std::domain_error);
}

TEST(Scalar, ExactArithmeticHasNoRounding) {
  Scalar third = Scalar::ratio(1, 3);
  Scalar sum = third + third + third;
  EXPECT_TRUE(sum.is_exact());
  EXPECT_EQ(sum.rational(), Rational(1));
  EXPECT_EQ((Scalar(2) / Scalar(6)).to_string(), "1/3");
  EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
}

TEST(Scalar, MixedOperandsPromoteToApprox) {
  Scalar a = Scalar::approx(0.5L, 1e-6);
  Scalar b = Scalar::ratio(1, 2);
  Scalar c = a + b;
  EXPECT_FALSE(c.is_exact());
  EXPECT_DOUBLE_EQ(c.to_double(), 1.0);
  EXPECT_DOUBLE_EQ(c.tolerance(), 1e-6);
  EXPECT_DOUBLE_EQ((Scalar::approx(1, 1e-3) * Scalar::approx(1, 1e-9)).tolerance(), 1e-3);
}

TEST(Scalar, ApproxComparisonsUseTolerance) {
  Scalar tiny = Scalar::approx(5e-10L);
  EXPECT_TRUE(tiny.is_zero());
  EXPECT_EQ(tiny.sign(), 0);
  EXPECT_TRUE(Scalar::approx(1.0L + 1e-12L) == Scalar(1));
  EXPECT_FALSE(Scalar::approx(1.001L) == Scalar(1));
  EXPECT_THROW(Scalar::approx(1, 0.0), std::invalid_argument);
}

TEST(Scalar, SqrtIsExactOnRationalSquares) {
  Scalar r = sqrt(Scalar::ratio(9, 4));
  EXPECT_TRUE(r.is_exact());
  EXPECT_EQ(r.rational(), Rational(3, 2));
  Scalar s = sqrt(Scalar(2));
  EXPECT_FALSE(s.is_exact());
  EXPECT_NEAR(s.to_double(), 1.4142135623730951, 1e-15);
  EXPECT_THROW(sqrt(Scalar(-1)), std::domain_error);
}

TEST(Scalar, TextForms) {
  EXPECT_EQ(Scalar(-7).to_string(), "-7");
  EXPECT_EQ(Scalar::ratio(10, -4).to_string(), "-5/2");
  EXPECT_EQ(Scalar::approx(0.1L).to_string(), "0.10000000000000001");
}

}  // namespace
}  // namespace ein2
