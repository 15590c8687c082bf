#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include <nlsstab/model.hpp>

using namespace nlsstab;

TEST(ClassifyCase, AllFourSignPairs) {
  EXPECT_EQ(classify_case(1, 1), CaseLabel::FF);
  EXPECT_EQ(classify_case(1, -1), CaseLabel::FD);
  EXPECT_EQ(classify_case(-1, 1), CaseLabel::DF);
  EXPECT_EQ(classify_case(-1, -1), CaseLabel::DD);
  EXPECT_EQ(to_string(CaseLabel::DF), "DF");
}

TEST(ClassifyCase, RejectsInvalidSigns) {
  EXPECT_THROW(classify_case(0, 1), std::domain_error);
  EXPECT_THROW(classify_case(1, 2), std::domain_error);
}

TEST(NonlinearityParams, ValidatesExponentOrdering) {
  EXPECT_NO_THROW(NonlinearityParams::make(2, 3, 4, 1, 1));
  EXPECT_THROW(NonlinearityParams::make(1, 3, 4, 1, 1), std::domain_error);
  EXPECT_THROW(NonlinearityParams::make(3, 3, 4, 1, 1), std::domain_error);
  EXPECT_THROW(NonlinearityParams::make(2, 5, 4, 1, 1), std::domain_error);
  EXPECT_THROW(NonlinearityParams::make(2, 3, NAN, 1, 1), std::domain_error);
  EXPECT_THROW(NonlinearityParams::make(2, 3, 4, 1, 0), std::domain_error);
}

TEST(NonlinearityParams, DerivedFlags) {
  const auto fd = NonlinearityParams::make(3, 5, 7, 1, -1);
  EXPECT_EQ(fd.label(), CaseLabel::FD);
  EXPECT_TRUE(fd.bottom_focusing());
  EXPECT_FALSE(fd.top_focusing());
  EXPECT_EQ(fd.a1(), 1.0);
  EXPECT_EQ(fd.a3(), -1.0);
}

TEST(Normalize, AlreadyNormalizedIsIdentity) {
  const auto red = normalize(1, -0.7, 1, 2, 3, 4);
  EXPECT_DOUBLE_EQ(red.kappa, 1);
  EXPECT_DOUBLE_EQ(red.lambda, 1);
  EXPECT_DOUBLE_EQ(red.gamma, 0.7);
  EXPECT_EQ(red.normalized.label(), CaseLabel::FF);
}

TEST(Normalize, KappaTwoExample) {
  const auto red = normalize(4, 0, 1, 2, 3, 4);
  EXPECT_NEAR(red.kappa, 2, 1e-15);
  EXPECT_NEAR(std::abs(red.b), 1, 1e-12);
  EXPECT_NEAR(std::abs(red.d), 1, 1e-12);
}

TEST(Normalize, SignsPreservedDD) {
  const auto red = normalize(-2, 1, -8, 2, 3, 4);
  EXPECT_EQ(red.normalized.label(), CaseLabel::DD);
  EXPECT_NEAR(red.b, -1, 1e-12);
  EXPECT_NEAR(red.d, -1, 1e-12);
  EXPECT_DOUBLE_EQ(red.gamma, -red.c);
}

TEST(Normalize, RandomCoefficientsReachUnitMagnitude) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(-2, 2), u(0, 1);
  for (int k = 0; k < 500; ++k) {
    const double a1 = (u(rng) < 0.5 ? -1 : 1) * std::pow(10.0, mag(rng));
    const double a3 = (u(rng) < 0.5 ? -1 : 1) * std::pow(10.0, mag(rng));
    const double a2 = 4 * (u(rng) - 0.5);
    const double p = 1.1 + 3 * u(rng), q = p + 0.1 + 2 * u(rng), r = q + 0.1 + 3 * u(rng);
    const auto red = normalize(a1, a2, a3, p, q, r);
    ASSERT_NEAR(std::abs(red.b), 1, 1e-12);
    ASSERT_NEAR(std::abs(red.d), 1, 1e-12);
    ASSERT_EQ(red.b > 0, a1 > 0);
    ASSERT_EQ(red.d > 0, a3 > 0);
    ASSERT_EQ(red.gamma, -red.c);
  }
}

TEST(Normalize, RejectsZeroCoefficients) {
  EXPECT_THROW(normalize(0, 1, 1, 2, 3, 4), std::domain_error);
  EXPECT_THROW(normalize(1, 1, 0, 2, 3, 4), std::domain_error);
  EXPECT_THROW(normalize(1, 1, 1, 3, 2, 4), std::domain_error);
}
