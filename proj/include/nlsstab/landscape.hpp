#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "model.hpp"

namespace nlsstab {

namespace detail {

// s^e with the s = 0 branch resolved exactly.
inline double power(double s, double e) {
  if (s == 0.0) {
    if (e > 0) return 0.0;
    if (e == 0) return 1.0;
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(e * std::log(s));
}

// 1 − s^e from log s; keeps full relative precision as s → 1.
inline double one_minus_pow(double e, double log_s) { return -std::expm1(e * log_s); }

// Half-exponents (l−1)/2 for l = p, q, r.
inline std::array<double, 3> half_exponents(const NonlinearityParams& np) {
  return {(np.p - 1) / 2, (np.q - 1) / 2, (np.r - 1) / 2};
}

// Coefficients of f/u: a₁, −γ, a₃.
inline std::array<double, 3> force_coefficients(const NonlinearityParams& np, double gamma) {
  return {np.a1(), -gamma, np.a3()};
}

} // namespace detail

struct LandscapeEval {
  double value = 0;
  double first_deriv = 0;
  double second_deriv = 0;
};

// F₁(γ,s) with U(s) = s(ω − F₁(s)).
inline double eval_F1(const NonlinearityParams& np, double gamma, double s) {
  const auto c = detail::force_coefficients(np, gamma);
  const auto e = detail::half_exponents(np);
  const std::array<double, 3> l{np.p, np.q, np.r};
  double sum = 0;
  for (int i = 0; i < 3; ++i)
    sum += 2 * c[i] / (l[i] + 1) * detail::power(s, e[i]);
  return sum;
}

// dF₁/ds, analytic.
inline double eval_F1_deriv(const NonlinearityParams& np, double gamma, double s) {
  const auto c = detail::force_coefficients(np, gamma);
  const auto e = detail::half_exponents(np);
  const std::array<double, 3> l{np.p, np.q, np.r};
  double sum = 0;
  for (int i = 0; i < 3; ++i)
    if (c[i] != 0.0) sum += 2 * c[i] / (l[i] + 1) * e[i] * detail::power(s, e[i] - 1);
  return sum;
}

// U(ω,γ,s) = ωs − 2a₁s^{(p+1)/2}/(p+1) + 2γs^{(q+1)/2}/(q+1) − 2a₃s^{(r+1)/2}/(r+1)
// and its first two s-derivatives, term by term.
inline LandscapeEval eval_U(const NonlinearityParams& np, double omega, double gamma, double s) {
  const auto c = detail::force_coefficients(np, gamma);
  const std::array<double, 3> l{np.p, np.q, np.r};
  LandscapeEval out{omega * s, omega, 0.0};
  for (int i = 0; i < 3; ++i) {
    if (c[i] == 0.0) continue;
    const double e = (l[i] - 1) / 2;
    out.value -= 2 * c[i] / (l[i] + 1) * detail::power(s, e + 1);
    out.first_deriv -= c[i] * detail::power(s, e);
    out.second_deriv -= c[i] * e * detail::power(s, e - 1);
  }
  return out;
}

// Magnitude scale of U′ at s, used to make boundary tolerances relative.
inline double uprime_scale(const NonlinearityParams& np, double omega, double gamma, double s) {
  const auto c = detail::force_coefficients(np, gamma);
  const auto e = detail::half_exponents(np);
  double sum = std::abs(omega);
  for (int i = 0; i < 3; ++i) sum += std::abs(c[i]) * detail::power(s, e[i]);
  return sum;
}

// A_l(a,s) = (1 − s^{(l−1)/2}) a^{(l−1)/2} / (l+1)
inline double eval_A(double l, double a, double s) {
  const double e = (l - 1) / 2;
  const double head = s == 0.0 ? 1.0 : detail::one_minus_pow(e, std::log(s));
  return head / (l + 1) * std::pow(a, e);
}

struct NDValue {
  double n = 0;
  double d = 0;
};

// N(a,s) and D(a,s) of the transformed stability integrand, with the a-powers folded into
// per-term weights so repeated evaluation along s only costs three expm1 calls.
class NDForm {
public:
  NDForm(const NonlinearityParams& np, double gamma, double a) : exponents_(detail::half_exponents(np)) {
    const auto c = detail::force_coefficients(np, gamma);
    const std::array<double, 3> l{np.p, np.q, np.r};
    for (int i = 0; i < 3; ++i) {
      weights_[i] = c[i] / (l[i] + 1) * std::pow(a, exponents_[i]);
      growth_[i] = 5 - l[i];
    }
  }

  // Evaluate from log s (s ∈ (0,1]); log s = −∞ means s = 0.
  NDValue at_log(double log_s) const {
    NDValue out;
    for (int i = 0; i < 3; ++i) {
      const double head = std::isinf(log_s) ? 1.0 : detail::one_minus_pow(exponents_[i], log_s);
      const double term = weights_[i] * head;
      out.d += term;
      out.n += growth_[i] * term;
    }
    return out;
  }

  NDValue at(double s) const {
    return at_log(s == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(s));
  }

private:
  std::array<double, 3> exponents_;
  std::array<double, 3> weights_{};
  std::array<double, 3> growth_{};
};

inline NDValue eval_ND(const NonlinearityParams& np, double gamma, double a, double s) {
  return NDForm(np, gamma, a).at(s);
}

} // namespace nlsstab
