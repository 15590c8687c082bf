#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include <nlsstab/signs.hpp>
#include <nlsstab/verify.hpp>

using namespace nlsstab;

TEST(GeneralizedPolynomial, ConstructionRules) {
  EXPECT_THROW(GeneralizedPolynomial({{1, 2}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(GeneralizedPolynomial({{0, 1}}), std::invalid_argument);
  const auto gp = GeneralizedPolynomial::from_terms({{1, 2}, {2, 0.5}, {-1, 2}, {3, 0.5}});
  ASSERT_EQ(gp.size(), 1u);
  EXPECT_EQ(gp.terms()[0].coefficient, 5);
  EXPECT_NEAR(gp(4), 10, 1e-15);
  const auto d = GeneralizedPolynomial({{-1, 0}, {1, 2}}).derivative();
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.terms()[0].exponent, 1);
  EXPECT_EQ(d.terms()[0].coefficient, 2);
}

TEST(SignChanges, Examples) {
  EXPECT_EQ(sign_changes(GeneralizedPolynomial({{1, 0.5}, {-2, 1.3}, {1, 2.7}})), 2);
  EXPECT_EQ(sign_changes(GeneralizedPolynomial({{1, 0.5}, {2, 1.3}, {1, 2.7}})), 0);
  // U′ coefficients (ω, −a₁, γ, −a₃) for FF with γ > 0.
  EXPECT_EQ(sign_changes(GeneralizedPolynomial({{0.4, 0}, {-1, 0.5}, {0.8, 1}, {-1, 1.5}})), 3);
}

TEST(CountPositiveRoots, Examples) {
  EXPECT_EQ(count_positive_roots_sampled(GeneralizedPolynomial({{-1, 0}, {1, 1}}), 10, 400), 1);
  EXPECT_EQ(count_positive_roots_sampled(GeneralizedPolynomial({{1, 0}, {2, 1.5}, {0.3, 4}}), 10, 400), 0);
  // (s − 1)(s − 2)(s − 3) has three roots in (0,10].
  EXPECT_EQ(count_positive_roots_sampled(GeneralizedPolynomial({{-6, 0}, {11, 1}, {-6, 2}, {1, 3}}), 10, 2000), 3);
}

TEST(CountPositiveRoots, NeverExceedsSignChanges) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 1000; ++k) {
    const auto gp = random_generalized_polynomial(rng, 4);
    ASSERT_LE(count_positive_roots_sampled(gp, 50, 600), sign_changes(gp));
  }
}

TEST(RatioH, IdenticalExponentsGiveOne) {
  for (double x : {0.01, 0.3, 0.9, 0.999}) EXPECT_NEAR(ratio_h(x, 0.4, 1.7, 0.4, 1.7), 1, 1e-15);
}

TEST(RatioH, IncreasingAndBoundedByLimit) {
  const double p1 = 1.2, q1 = 3.1, p2 = 0.7, q2 = 1.9;
  const double lim = ratio_h_limit_at_one(p1, q1, p2, q2);
  double prev = 0;
  for (int k = 1; k < 1000; ++k) {
    const double h = ratio_h(k / 1000.0, p1, q1, p2, q2);
    ASSERT_GT(h, prev);
    ASSERT_LE(h, lim);
    prev = h;
  }
  EXPECT_NEAR(ratio_h(1 - 1e-9, p1, q1, p2, q2), lim, 1e-6);
  EXPECT_THROW(ratio_h(1.5, p1, q1, p2, q2), std::invalid_argument);
}
