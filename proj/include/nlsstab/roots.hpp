#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "signs.hpp"

namespace nlsstab {

// Bisection on a bracket with f(lo)·f(hi) ≤ 0, run until the bracket stops shrinking.
// Uses the geometric midpoint while the bracket spans more than a factor of two, so
// brackets like [1e−12, 1e6] converge as fast as narrow ones.
template <class F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  for (int it = 0; it < 2000; ++it) {
    const double mid = (lo > 0 && hi > 2 * lo) ? std::sqrt(lo) * std::sqrt(hi) : lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

// Newton from x0 kept inside [lo, hi]; falls back to bisection steps when Newton leaves the
// bracket. Requires f(lo)·f(hi) ≤ 0.
template <class F, class DF>
double newton_safeguarded(F&& f, DF&& df, double lo, double hi, double x0, double rel_tol = 1e-15) {
  double flo = f(lo);
  double x = std::clamp(x0, lo, hi);
  for (int it = 0; it < 100; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0) == (flo < 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = df(x);
    double next = d != 0.0 ? x - fx / d : lo + 0.5 * (hi - lo);
    if (!(next > lo && next < hi)) next = lo + 0.5 * (hi - lo);
    if (std::abs(next - x) <= rel_tol * std::abs(x)) return next;
    x = next;
  }
  return x;
}

// Enclosure (lo, hi) for the positive zeros of a generalized polynomial with at least two
// terms: a zero needs the extreme term to be matched by the others, which fails far out.
inline std::pair<double, double> positive_root_bounds(const GeneralizedPolynomial& gp) {
  const auto t = gp.terms();
  const std::size_t n = t.size();
  double rest_hi = 0, rest_lo = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) rest_hi += std::abs(t[i].coefficient);
  for (std::size_t i = 1; i < n; ++i) rest_lo += std::abs(t[i].coefficient);
  const double hi =
      std::max(1.0, std::pow(rest_hi / std::abs(t[n - 1].coefficient), 1.0 / (t[n - 1].exponent - t[n - 2].exponent)));
  const double lo =
      std::min(1.0, std::pow(std::abs(t[0].coefficient) / rest_lo, 1.0 / (t[1].exponent - t[0].exponent)));
  // Nearly equal extreme exponents push the bounds past the double range; clamp them.
  return {std::max(0.5 * lo, 1e-300), std::min(2 * hi, 1e300)};
}

// Every sign-changing positive zero of gp in (lo, hi), ascending. The zeros of the derivative
// split the range into monotone pieces, each holding at most one zero.
inline std::vector<double> isolate_roots(const GeneralizedPolynomial& gp, double lo, double hi);

// Sign-changing zeros of gp′ in (lo, hi): the interior extrema of gp.
inline std::vector<double> critical_points(const GeneralizedPolynomial& gp, double lo, double hi) {
  if (gp.size() < 2) return {};
  const auto flat = gp.shifted(-gp.terms()[0].exponent);
  return isolate_roots(flat.derivative(), lo, hi);
}

inline std::vector<double> isolate_roots(const GeneralizedPolynomial& gp, double lo, double hi) {
  if (gp.size() < 2) return {};
  const auto [blo, bhi] = positive_root_bounds(gp);
  lo = std::max(lo, blo);
  hi = std::min(hi, bhi);
  if (!(lo < hi)) return {};

  std::vector<double> knots{lo};
  for (double c : critical_points(gp, lo, hi)) knots.push_back(c);
  knots.push_back(hi);

  // gp·s^{−e} with e the top exponent above 1 and the bottom one below: same zeros and signs,
  // but neither the leading nor the trailing term can overflow or underflow.
  const double e_lo = gp.terms().front().exponent, e_hi = gp.terms().back().exponent;
  auto f = [&](double x) {
    const double lx = std::log(x), e = x > 1 ? e_hi : e_lo;
    double sum = 0;
    for (const auto& t : gp.terms()) sum += t.coefficient * std::exp((t.exponent - e) * lx);
    return sum;
  };
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i], b = knots[i + 1];
    const double fa = f(a), fb = f(b);
    if (fa == 0.0 && i > 0) {
      if (roots.empty() || roots.back() != a) roots.push_back(a);
    } else if ((fa < 0) != (fb < 0) && fb != 0.0) {
      roots.push_back(bisect(f, a, b));
    }
  }
  return roots;
}

struct FirstZero {
  double x = 0;
  bool tangent = false;
};

// Smallest positive zero of gp, where gp > 0 near 0⁺. A local minimum with |gp| ≤ tol(x)
// counts as a double zero and is reported as tangent, which keeps points parameterized on
// the degenerate set from splitting into two nearby simple zeros.
template <class Tol>
std::optional<FirstZero> first_positive_zero(const GeneralizedPolynomial& gp, Tol&& tol) {
  if (gp.size() < 2) return std::nullopt;
  const auto [lo, hi] = positive_root_bounds(gp);
  std::vector<double> knots{lo};
  for (double c : critical_points(gp, lo, hi)) knots.push_back(c);
  knots.push_back(hi);

  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i], b = knots[i + 1];
    const double fa = i == 0 && gp(a) == 0.0 ? gp.terms()[0].coefficient : gp(a), fb = gp(b);
    const bool b_is_min = i + 2 < knots.size() && fb <= fa;
    if (b_is_min && std::abs(fb) <= tol(b)) return FirstZero{b, true};
    if (fa > 0 && fb <= 0) return FirstZero{bisect(gp, a, b), false};
  }
  return std::nullopt;
}

} // namespace nlsstab
