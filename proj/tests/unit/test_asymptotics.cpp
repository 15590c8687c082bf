#include <cmath>

#include <gtest/gtest.h>

#include <nlsstab/asymptotics.hpp>

using namespace nlsstab;
using D = LimitDirection;
using L = LimitClass;

namespace {
NonlinearityParams P(double p, double q, double r, int s1, int s3) { return NonlinearityParams::make(p, q, r, s1, s3); }
} // namespace

TEST(ClassifyLimit, SpecExamples) {
  EXPECT_EQ(classify_limit(P(3, 4, 5, 1, 1), D::OmegaToZero, 0), L::PosInfinity);
  EXPECT_EQ(classify_limit(P(2, 3, 4, 1, 1), D::OmegaToZero, 0), L::ZeroPlus);
  EXPECT_EQ(classify_limit(P(3, 6, 7, 1, 1), D::GammaToNegInf, 1), L::ZeroMinus);
  EXPECT_EQ(classify_limit(P(3, 4, 7, -1, 1), D::GammaToNegInf, 1), L::ZeroPlus);
}

TEST(ClassifyLimit, FocusingBottomOmegaToZero) {
  EXPECT_EQ(classify_limit(P(6, 7, 8, 1, 1), D::OmegaToZero, 0), L::NegInfinity);
  EXPECT_EQ(classify_limit(P(7.0 / 3, 3, 4, 1, -1), D::OmegaToZero, 0), L::FinitePositive);
  // p = 5, γ ≠ 0 follows q against 9 with the sign of γ.
  EXPECT_EQ(classify_limit(P(5, 10, 11, 1, 1), D::OmegaToZero, 1), L::ZeroPlus);
  EXPECT_EQ(classify_limit(P(5, 9, 11, 1, 1), D::OmegaToZero, -1), L::FiniteNegative);
  EXPECT_EQ(classify_limit(P(5, 6, 11, 1, 1), D::OmegaToZero, 1), L::PosInfinity);
  // p = 5, γ = 0 follows r against 9 with the sign opposite to a₃.
  EXPECT_EQ(classify_limit(P(5, 6, 10, 1, 1), D::OmegaToZero, 0), L::ZeroMinus);
  EXPECT_EQ(classify_limit(P(5, 6, 10, 1, -1), D::OmegaToZero, 0), L::ZeroPlus);
  EXPECT_EQ(classify_limit(P(5, 6, 8, 1, 1), D::OmegaToZero, 0), L::NegInfinity);
}

TEST(ClassifyLimit, DefocusingBottomOmegaToZero) {
  EXPECT_EQ(classify_limit(P(3, 4, 7, -1, 1), D::OmegaToZero, 0), L::NegInfinity);
  EXPECT_EQ(classify_limit(P(3, 4, 7, -1, -1), D::OmegaToZero, 0), L::NegInfinity);
  EXPECT_EQ(classify_limit(P(1.3, 1.8, 2.5, -1, 1), D::OmegaToZero, 0), L::FinitePositive);
  EXPECT_EQ(classify_limit(P(2.2, 2.8, 4, -1, 1), D::OmegaToZero, 0), L::FiniteNegative);
  EXPECT_THROW(classify_limit(P(2, 2.5, 3, -1, 1), D::OmegaToZero, 0), no_statement_error);
  EXPECT_THROW(classify_limit(P(2, 2.5, 3, -1, -1), D::OmegaToZero, 0), no_statement_error);
}

TEST(ClassifyLimit, OmegaToInfinity) {
  EXPECT_EQ(classify_limit(P(3, 4, 7, 1, 1), D::OmegaToInf, 0), L::ZeroMinus);
  EXPECT_EQ(classify_limit(P(2, 3, 4, 1, 1), D::OmegaToInf, 0), L::ZeroPlus);
  EXPECT_EQ(classify_limit(P(1.5, 2, 7.0 / 3, 1, 1), D::OmegaToInf, 0), L::FinitePositive);
  EXPECT_EQ(classify_limit(P(1.5, 2, 2.2, -1, 1), D::OmegaToInf, 0), L::PosInfinity);
  EXPECT_EQ(classify_limit(P(2, 3, 5, 1, 1), D::OmegaToInf, 0), L::ZeroPlus);
  EXPECT_EQ(classify_limit(P(2, 3, 5, -1, 1), D::OmegaToInf, 0), L::ZeroMinus);
  EXPECT_EQ(classify_limit(P(2, 3, 5, 1, 1), D::OmegaToInf, 1), L::ZeroMinus);
  EXPECT_EQ(classify_limit(P(2, 3, 5, -1, 1), D::OmegaToInf, -1), L::ZeroPlus);
  EXPECT_THROW(classify_limit(P(3, 5, 7, 1, -1), D::OmegaToInf, 0), unsupported_error);
}

TEST(ClassifyLimit, GammaToInfinity) {
  EXPECT_EQ(classify_limit(P(1.2, 1.5, 2, 1, 1), D::GammaToInf, 1), L::PosInfinity);
  EXPECT_EQ(classify_limit(P(1.2, 1.5, 7.0 / 3, 1, 1), D::GammaToInf, 1), L::FinitePositive);
  EXPECT_EQ(classify_limit(P(1.2, 1.5, 3, 1, 1), D::GammaToInf, 1), L::ZeroPlus);
  EXPECT_EQ(classify_limit(P(1.2, 2, 3, 1, 1), D::GammaToInf, 1), L::ExactZero);
  EXPECT_EQ(classify_limit(P(1.2, 2.2, 3, 1, 1), D::GammaToInf, 1), L::ZeroMinus);
  EXPECT_EQ(classify_limit(P(2, 3, 4, 1, 1), D::GammaToInf, 1), L::NegInfinity);
  EXPECT_EQ(classify_limit(P(2, 3, 4, -1, 1), D::GammaToInf, 1), L::ZeroMinus);
  EXPECT_THROW(classify_limit(P(2, 3, 4, -1, -1), D::GammaToInf, 1), unsupported_error);
}

TEST(ClassifyLimit, GammaToNegativeInfinity) {
  EXPECT_EQ(classify_limit(P(2, 5, 7, 1, 1), D::GammaToNegInf, 1), L::ZeroPlus);
  EXPECT_EQ(classify_limit(P(2, 5, 7, -1, 1), D::GammaToNegInf, 1), L::ZeroMinus);
  EXPECT_EQ(classify_limit(P(2, 4, 7, 1, -1), D::GammaToNegInf, 1), L::ZeroPlus);
  EXPECT_EQ(classify_limit(P(2, 6, 7, -1, -1), D::GammaToNegInf, 1), L::ZeroMinus);
}

TEST(LimitClass, Helpers) {
  EXPECT_EQ(sign_of(L::ZeroMinus), -1);
  EXPECT_EQ(sign_of(L::ExactZero), 0);
  EXPECT_EQ(sign_of(L::PosInfinity), 1);
  EXPECT_TRUE(tends_to_zero(L::ZeroPlus));
  EXPECT_TRUE(tends_to_infinity(L::NegInfinity));
  EXPECT_FALSE(tends_to_infinity(L::FinitePositive));
  EXPECT_EQ(to_string(L::ZeroMinus), "0-");
}

TEST(AsymptoticExponent, SpecExamples) {
  EXPECT_DOUBLE_EQ(*asymptotic_exponent(P(2, 3, 4, 1, 1), D::OmegaToZero), 0.25);
  EXPECT_DOUBLE_EQ(*asymptotic_exponent(P(2, 3, 4, 1, 1), D::OmegaToInf), -1.25);
  EXPECT_DOUBLE_EQ(*asymptotic_exponent(P(2, 3, 4, 1, 1), D::GammaToNegInf), 1);
  EXPECT_DOUBLE_EQ(*asymptotic_exponent(P(2, 5, 7, 1, 1), D::GammaToNegInf), 1.5);
  EXPECT_DOUBLE_EQ(*asymptotic_exponent(P(5, 8, 10, 1, 1), D::OmegaToZero, 1), -0.5);
  EXPECT_DOUBLE_EQ(*asymptotic_exponent(P(5, 8, 10, 1, 1), D::OmegaToZero, 0), 0.5);
  EXPECT_FALSE(asymptotic_exponent(P(3, 5, 7, 1, -1), D::OmegaToInf));
  EXPECT_FALSE(asymptotic_exponent(P(3, 4, 7, -1, 1), D::OmegaToZero));
}

TEST(SignGuarantees, SpecExamples) {
  const auto fd = sign_guarantees(P(3, 5, 7, 1, -1));
  ASSERT_EQ(fd.size(), 1u);
  EXPECT_EQ(fd[0].statement, SignStatement::AllStablePositiveJ);
  const auto df = sign_guarantees(P(3, 5, 7, -1, 1));
  EXPECT_EQ(df[0].statement, SignStatement::AllUnstableNegativeJ);
  const auto ff = sign_guarantees(P(3, 6, 7, 1, 1));
  EXPECT_EQ(ff[0].statement, SignStatement::UnstableForLargeOmega);
}

TEST(SignGuarantees, OmegaZeroStatementsAndNone) {
  EXPECT_EQ(sign_guarantees(P(1.3, 1.8, 2.5, -1, 1))[0].statement, SignStatement::OmegaZeroPositive);
  EXPECT_EQ(sign_guarantees(P(2.2, 2.8, 4, -1, 1))[0].statement, SignStatement::OmegaZeroNegative);
  EXPECT_EQ(sign_guarantees(P(2, 2.5, 3, -1, 1))[0].statement, SignStatement::OmegaZeroSignChange);
  const auto none = sign_guarantees(P(2, 3, 4, 1, 1));
  ASSERT_EQ(none.size(), 1u);
  EXPECT_EQ(none[0].statement, SignStatement::None);
  EXPECT_EQ(sign_guarantees(P(3, 4, 7, -1, -1))[0].statement, SignStatement::None);
}
