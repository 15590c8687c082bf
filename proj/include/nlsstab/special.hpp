#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace nlsstab {

namespace detail {

inline void require_positive(const char* what, double x, double y) {
  if (!(x > 0 && y > 0))
    throw std::domain_error(std::string(what) + ": arguments must be positive, got (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")");
}

} // namespace detail

// log Γ(x) for x > 0. Lanczos approximation (g = 7, nine terms), about 1e−15 relative.
inline double log_gamma(double x) {
  if (!(x > 0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x < 0.5) return log_gamma(x + 1) - std::log(x);
  static constexpr std::array<double, 9> c{0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                           771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                           -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const double z = x - 1;
  double sum = c[0];
  for (int i = 1; i < 9; ++i) sum += c[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// ψ(x) for x > 0: shift up with ψ(x) = ψ(x+1) − 1/x, then the asymptotic series.
inline double digamma(double x) {
  if (!(x > 0)) throw std::domain_error("digamma: argument must be positive");
  double acc = 0;
  while (x < 10) {
    acc -= 1 / x;
    x += 1;
  }
  const double inv2 = 1 / (x * x);
  const double series =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12))))));
  return acc + std::log(x) - 0.5 / x - series;
}

inline double beta_fn(double x, double y) {
  detail::require_positive("beta_fn", x, y);
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

// ∂B/∂x = B(x,y)(ψ(x) − ψ(x+y))
inline double dbeta_dx(double x, double y) {
  detail::require_positive("dbeta_dx", x, y);
  return beta_fn(x, y) * (digamma(x) - digamma(x + y));
}

// H(x,y) = ∫₀¹ t^{x−1}(1−t^y)/(1−t)^{3/2} dt in Beta form.
inline double h_fn(double x, double y) {
  detail::require_positive("h_fn", x, y);
  return -(2 * x - 1) * beta_fn(x, 0.5) + (2 * x + 2 * y - 1) * beta_fn(x + y, 0.5);
}

// ∫₀¹ [−(5−p)(1−s^{(p−1)/2}) + (5−q)(1−s^{(q−1)/2})] / (s^{(p−1)/2} − s^{(q−1)/2})^{3/2} ds
inline double two_power_integral(double p, double q) {
  if (!(1 < p && p < q)) throw std::domain_error("two_power_integral: need 1 < p < q");
  if (!(p < 7.0 / 3)) throw unsupported_error("two_power_integral: the integral diverges for p >= 7/3");
  return 2 * (7 - 2 * p - q) / (q - p) * beta_fn((7 - 3 * p) / (2 * (q - p)), 0.5);
}

struct BetaDerivBounds {
  double lower = 0;
  double upper = 0;
};

// Bounds on ∂ₓB(b+½, ½).
inline BetaDerivBounds beta_deriv_bounds(double b) {
  if (!(b > 0)) throw std::domain_error("beta_deriv_bounds: b must be positive");
  const double base = beta_fn(b + 0.5, 0.5);
  return {-base / (2 * b), -base / (2 * b + 1)};
}

} // namespace nlsstab
