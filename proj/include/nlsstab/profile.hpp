#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "landscape.hpp"
#include "roots.hpp"

namespace nlsstab {

struct ProfileResult {
  double a = 0;           // squared amplitude φ₀²
  double uprime_at_a = 0; // U′(a)
  bool exists = false;
  bool on_boundary = false;
};

// ω − F₁(γ,·) as a generalized polynomial in s.
inline GeneralizedPolynomial amplitude_equation(const NonlinearityParams& np, double omega, double gamma) {
  const auto c = detail::force_coefficients(np, gamma);
  const auto e = detail::half_exponents(np);
  const std::array<double, 3> l{np.p, np.q, np.r};
  std::vector<Term> terms{{omega, 0.0}};
  for (int i = 0; i < 3; ++i) terms.push_back({-2 * c[i] / (l[i] + 1), e[i]});
  return GeneralizedPolynomial::from_terms(std::move(terms));
}

// Tolerance on U′(a) below which the profile counts as sitting on the nonexistence curve.
inline double boundary_tolerance(const NonlinearityParams& np, double omega, double gamma, double a) {
  return 1e-9 * (1 + uprime_scale(np, omega, gamma, a));
}

namespace detail {

inline auto tangency_tolerance(const NonlinearityParams& np, double omega, double gamma) {
  return [&np, omega, gamma](double s) { return 1e-12 * (1 + uprime_scale(np, omega, gamma, s)); };
}

} // namespace detail

// a(ω,γ) = inf{s > 0 : F₁(s) = ω}; empty when ω − F₁ stays positive.
inline std::optional<ProfileResult> find_a(const NonlinearityParams& np, double omega, double gamma) {
  if (!(omega > 0) || !std::isfinite(omega)) throw std::domain_error("find_a: omega must be positive");
  if (!std::isfinite(gamma)) throw std::domain_error("find_a: gamma must be finite");
  const auto gp = amplitude_equation(np, omega, gamma);
  const auto zero = first_positive_zero(gp, detail::tangency_tolerance(np, omega, gamma));
  if (!zero) return std::nullopt;

  ProfileResult out;
  out.a = zero->x;
  // At a zero of ω − F₁, U′(a) = −a F₁′(a); this avoids subtracting nearly equal terms.
  out.uprime_at_a = -out.a * eval_F1_deriv(np, gamma, out.a);
  const double tol = boundary_tolerance(np, omega, gamma, out.a);
  out.on_boundary = zero->tangent || std::abs(out.uprime_at_a) <= tol;
  out.exists = !out.on_boundary && out.uprime_at_a < -tol;
  return out;
}

// Local minima of ω − F₁ strictly inside (0, a). Right after crossing the curve from the
// upper-right these are shallow dips where U nearly vanishes.
inline std::vector<double> interior_minima(const NonlinearityParams& np, double omega, double gamma, double a) {
  const auto gp = amplitude_equation(np, omega, gamma);
  std::vector<double> out;
  for (double c : critical_points(gp, 0.0, a)) {
    if (c >= a) break;
    if (eval_F1_deriv(np, gamma, c * (1 - 1e-9)) < 0 || eval_F1_deriv(np, gamma, c * (1 + 1e-9)) > 0) continue;
    out.push_back(c);
  }
  return out;
}

// a₀(γ): smallest positive zero of F₁(γ,·) in the D* cases, the ω → 0⁺ limit of a(ω,γ).
inline std::optional<double> find_a0(const NonlinearityParams& np, double gamma) {
  if (np.sign1 != -1) throw std::domain_error("find_a0: only defined when the lowest power is defocusing");
  if (!std::isfinite(gamma)) throw std::domain_error("find_a0: gamma must be finite");
  const auto c = detail::force_coefficients(np, gamma);
  const auto e = detail::half_exponents(np);
  const std::array<double, 3> l{np.p, np.q, np.r};
  std::vector<Term> terms;
  for (int i = 0; i < 3; ++i) terms.push_back({-2 * c[i] / (l[i] + 1), e[i]});
  const auto gp = GeneralizedPolynomial::from_terms(std::move(terms));
  const auto zero = first_positive_zero(gp, [&](double s) { return 1e-12 * uprime_scale(np, 0.0, gamma, s); });
  if (!zero) return std::nullopt;
  return zero->x;
}

} // namespace nlsstab
