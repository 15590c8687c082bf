#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <nlsstab/quadrature.hpp>
#include <nlsstab/roots.hpp>
#include <nlsstab/verify.hpp>

using namespace nlsstab;

TEST(Quadrature, SmoothIntegrands) {
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 2, 1e-12);
  const auto e = integrate([](double x) { return std::exp(x); }, -1.0, 2.0);
  EXPECT_NEAR(e.value, std::exp(2.0) - std::exp(-1.0), 1e-12);
}

TEST(Quadrature, EndpointSingularityAndBreakpoints) {
  const auto r = integrate([](double x) { return 1 / std::sqrt(x); }, 0.0, 1.0);
  EXPECT_NEAR(r.value, 2, 1e-8);
  const auto k = integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, std::vector<double>{0.3});
  EXPECT_NEAR(k.value, 0.5 * (0.09 + 0.49), 1e-14);
  EXPECT_TRUE(k.converged);
}

TEST(Quadrature, ErrorEstimateIsHonest) {
  QuadratureOptions o;
  o.max_intervals = 3;
  const auto r = integrate([](double x) { return std::cos(40 * x); }, 0.0, 3.0, o);
  const double exact = std::sin(120.0) / 40;
  EXPECT_GE(r.abs_error, 0.1 * std::abs(r.value - exact));
}

TEST(Bisect, FindsRootOnWideBracket) {
  const double x = bisect([](double s) { return std::log(s) - std::log(3e-7); }, 1e-12, 1e6);
  EXPECT_NEAR(x, 3e-7, 1e-20);
}

TEST(NewtonSafeguarded, ConvergesFromPoorStart) {
  const double x = newton_safeguarded([](double s) { return s * s * s - 2; }, [](double s) { return 3 * s * s; }, 0.0,
                                      5.0, 4.9);
  EXPECT_NEAR(x, std::cbrt(2.0), 1e-14);
}

TEST(IsolateRoots, MatchesKnownRoots) {
  const GeneralizedPolynomial gp({{-6, 0}, {11, 1}, {-6, 2}, {1, 3}});
  const auto roots = isolate_roots(gp, 0.0, 10.0);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(roots[0], 1, 1e-12);
  EXPECT_NEAR(roots[1], 2, 1e-12);
  EXPECT_NEAR(roots[2], 3, 1e-12);
}

TEST(IsolateRoots, ConsistentWithSampledCount) {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 300; ++k) {
    const auto gp = random_generalized_polynomial(rng, 5);
    if (gp.size() < 2) continue;
    const auto [lo, hi] = positive_root_bounds(gp);
    const auto roots = isolate_roots(gp, lo, hi);
    ASSERT_LE(static_cast<int>(roots.size()), sign_changes(gp));
    for (double x : roots) {
      double scale = 0;
      for (const auto& t : gp.terms()) scale += std::abs(t.coefficient) * std::pow(x, t.exponent);
      ASSERT_LE(std::abs(gp(x)), 1e-10 * scale);
    }
  }
}

TEST(FirstPositiveZero, SimpleAndTangent) {
  auto tol = [](double) { return 1e-12; };
  const auto z = first_positive_zero(GeneralizedPolynomial({{2, 0}, {-1, 1}}), tol);
  ASSERT_TRUE(z);
  EXPECT_NEAR(z->x, 2, 1e-14);
  EXPECT_FALSE(z->tangent);
  // (s − 1)² = 1 − 2s + s²: double zero at 1.
  const auto t = first_positive_zero(GeneralizedPolynomial({{1, 0}, {-2, 1}, {1, 2}}), tol);
  ASSERT_TRUE(t);
  EXPECT_TRUE(t->tangent);
  EXPECT_NEAR(t->x, 1, 1e-8);
  EXPECT_FALSE(first_positive_zero(GeneralizedPolynomial({{1, 0}, {1, 2}}), tol));
}
