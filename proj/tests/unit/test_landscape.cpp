#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <nlsstab/landscape.hpp>
#include <nlsstab/profile.hpp>

using namespace nlsstab;

namespace {
const auto ff234 = NonlinearityParams::make(2, 3, 4, 1, 1);
const auto df234 = NonlinearityParams::make(2, 3, 4, -1, 1);
} // namespace

TEST(EvalF1, DirectSums) {
  EXPECT_NEAR(eval_F1(ff234, 0, 1), 16.0 / 15, 1e-15);
  EXPECT_NEAR(eval_F1(df234, 0, 1), -4.0 / 15, 1e-15);
  EXPECT_LT(std::abs(eval_F1(ff234, 3, 1e-14)), 1e-6);
}

TEST(EvalU, OriginValues) {
  const auto u = eval_U(ff234, 0.3, -1, 0);
  EXPECT_EQ(u.value, 0);
  EXPECT_EQ(u.first_deriv, 0.3);
}

TEST(EvalU, VanishesWhereF1EqualsOmega) { EXPECT_NEAR(eval_U(ff234, 16.0 / 15, 0, 1).value, 0, 1e-15); }

TEST(EvalU, IdentityWithF1AndFiniteDifferences) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 200; ++k) {
    const double p = 1.2 + 3 * u(rng), q = p + 0.2 + 2 * u(rng), r = q + 0.2 + 3 * u(rng);
    const auto np = NonlinearityParams::make(p, q, r, u(rng) < 0.5 ? 1 : -1, u(rng) < 0.5 ? 1 : -1);
    const double w = 2 * u(rng), g = 4 * (u(rng) - 0.5), s = 0.05 + 2 * u(rng);
    const auto ev = eval_U(np, w, g, s);
    const double ident = s * (w - eval_F1(np, g, s));
    ASSERT_NEAR(ev.value, ident, 1e-12 * (std::abs(ident) + s * w + 1e-3));
    const double h = 1e-6 * s;
    const double fd1 = (eval_U(np, w, g, s + h).value - eval_U(np, w, g, s - h).value) / (2 * h);
    const double fd2 = (eval_U(np, w, g, s + h).first_deriv - eval_U(np, w, g, s - h).first_deriv) / (2 * h);
    const double scale1 = uprime_scale(np, w, g, s);
    ASSERT_NEAR(fd1, ev.first_deriv, 1e-6 * scale1);
    ASSERT_NEAR(fd2, ev.second_deriv, 1e-5 * (std::abs(ev.second_deriv) + scale1 / s));
  }
}

TEST(EvalA, Examples) {
  EXPECT_NEAR(eval_A(3, 1, 0), 0.25, 1e-15);
  EXPECT_EQ(eval_A(3.7, 2.5, 1), 0);
  EXPECT_NEAR(eval_A(2, 4, 0.25), 1.0 / 3, 1e-15);
}

TEST(EvalA, RatioToOneMinusSBounded) {
  for (double l : {1.3, 2.0, 5.0, 9.0})
    for (int k = 1; k < 1000; ++k) {
      const double s = k / 1000.0;
      const double ratio = eval_A(l, 1.7, s) / (1 - s);
      ASSERT_TRUE(std::isfinite(ratio) && ratio > 0);
      ASSERT_TRUE(std::isfinite(1 / ratio));
    }
}

TEST(EvalND, Examples) {
  const auto end = eval_ND(ff234, 0.4, 2.0, 1);
  EXPECT_EQ(end.n, 0);
  EXPECT_EQ(end.d, 0);
  const auto v = eval_ND(ff234, 0, 1, 0);
  EXPECT_NEAR(v.n, 6.0 / 5, 1e-15);
  EXPECT_NEAR(v.d, 8.0 / 15, 1e-15);
}

TEST(EvalND, DenominatorMatchesLandscapeAtProfile) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  int checked = 0;
  while (checked < 100) {
    const double p = 1.2 + 3 * u(rng), q = p + 0.2 + 2 * u(rng), r = q + 0.2 + 3 * u(rng);
    const auto np = NonlinearityParams::make(p, q, r, u(rng) < 0.5 ? 1 : -1, u(rng) < 0.5 ? 1 : -1);
    const double w = 0.05 + 2 * u(rng), g = 4 * (u(rng) - 0.5);
    const auto prof = find_a(np, w, g);
    if (!prof || !prof->exists || prof->a < 1e-6 || prof->a > 1e6) continue;
    ++checked;
    for (int k = 1; k <= 9; ++k) {
      const double s = k / 10.0, a = prof->a;
      const double d = eval_ND(np, g, a, s).d;
      ASSERT_GT(d, 0);
      const double rhs = eval_U(np, w, g, a * s).value / (a * s);
      ASSERT_NEAR(2 * d, rhs, 1e-10 * std::max(std::abs(rhs), uprime_scale(np, w, g, a)));
    }
  }
}
