#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "landscape.hpp"
#include "profile.hpp"
#include "quadrature.hpp"

namespace nlsstab {

enum class JMethod { Transformed, Raw, MassFd, OmegaZero };

inline std::string_view to_string(JMethod m) {
  switch (m) {
  case JMethod::Transformed: return "transformed";
  case JMethod::Raw: return "raw";
  case JMethod::MassFd: return "mass_fd";
  case JMethod::OmegaZero: return "omega_zero";
  }
  return "?";
}

struct StabilityValue {
  double j = 0;
  double abs_error = 0;
  bool diverging = false;
  JMethod method = JMethod::Transformed;
};

enum class StabilityVerdict { Stable, Unstable, Indeterminate };

inline std::string_view to_string(StabilityVerdict v) {
  switch (v) {
  case StabilityVerdict::Stable: return "stable";
  case StabilityVerdict::Unstable: return "unstable";
  case StabilityVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

inline StabilityVerdict verdict(const StabilityValue& v) {
  if (std::isnan(v.j) || !(std::abs(v.j) > v.abs_error)) return StabilityVerdict::Indeterminate;
  return v.j > 0 ? StabilityVerdict::Stable : StabilityVerdict::Unstable;
}

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponent m of the substitution s = t^m on the left half of [0,1]. In the D* cases the
// integrand approaches s^{−3(p−1)/4} as ω → 0; m = 8/(7−3p) turns that into a linear factor.
inline double left_power(const NonlinearityParams& np) {
  if (np.sign1 < 0 && np.p < 7.0 / 3) return std::clamp(8 / (7 - 3 * np.p), 2.0, 64.0);
  return 2.0;
}

inline ProfileResult require_profile(const NonlinearityParams& np, double omega, double gamma) {
  const auto prof = find_a(np, omega, gamma);
  if (!prof)
    throw not_found_error("no standing wave at omega=" + std::to_string(omega) + ", gamma=" + std::to_string(gamma));
  return *prof;
}

// ∫₀¹ g(s) ds for integrands with an integrable (1−s)^{−1/2}-type endpoint at s = 1.
// [0, ½] uses s = t^m, [½, 1] uses s = 1 − u²; g receives (s, log s, 1 − s) so callers can keep
// precision at both ends, plus the log of the substitution's Jacobian, which g multiplies in
// itself so that large and small power factors can be combined before exponentiating.
// `breaks` are interior points in s.
template <class G>
QuadratureResult integrate_unit(G&& g, double m, const std::vector<double>& breaks, const QuadratureOptions& opts) {
  const double t_half = std::pow(0.5, 1 / m);
  const double u_half = std::sqrt(0.5);
  std::vector<double> left_breaks, right_breaks;
  for (double s : breaks) {
    if (!(s > 0 && s < 1)) continue;
    if (s <= 0.5)
      left_breaks.push_back(std::pow(s, 1 / m));
    else
      right_breaks.push_back(std::sqrt(1 - s));
  }
  auto left = [&](double t) {
    const double log_s = m * std::log(t);
    const double s = std::exp(log_s);
    return g(s, log_s, -std::expm1(log_s), std::log(m) + (m - 1) * std::log(t));
  };
  auto right = [&](double u) {
    const double one_minus = u * u;
    return g(1 - one_minus, std::log1p(-one_minus), one_minus, std::log(2 * u));
  };
  const auto l = integrate(left, 0.0, t_half, left_breaks, opts);
  const auto r = integrate(right, 0.0, u_half, right_breaks, opts);
  return {l.value + r.value, l.abs_error + r.abs_error, l.intervals + r.intervals, l.converged && r.converged};
}

// Interior dips of U below the boundary tolerance make J diverge to −∞; milder dips are
// returned as breakpoints (in units of a).
inline std::optional<std::vector<double>> dip_breakpoints(const NonlinearityParams& np, double omega, double gamma,
                                                          double a) {
  std::vector<double> out;
  for (double c : interior_minima(np, omega, gamma, a)) {
    const double depth = omega - eval_F1(np, gamma, c);
    if (depth <= boundary_tolerance(np, omega, gamma, c)) return std::nullopt;
    out.push_back(c / a);
  }
  return out;
}

} // namespace detail

// J = C ∫₀¹ N(a,s)/D(a,s)^{3/2} ds with C = −a/(4√2 U′(a)).
inline StabilityValue eval_J(const NonlinearityParams& np, double omega, double gamma,
                             const QuadratureOptions& opts = {}) {
  const auto prof = detail::require_profile(np, omega, gamma);
  StabilityValue out;
  out.method = JMethod::Transformed;
  if (prof.on_boundary) {
    out.j = detail::kInf;
    out.diverging = true;
    return out;
  }
  const double a = prof.a;
  const auto breaks = detail::dip_breakpoints(np, omega, gamma, a);
  if (!breaks) {
    out.j = -detail::kInf;
    out.diverging = true;
    return out;
  }
  const NDForm nd(np, gamma, a);
  auto g = [&](double, double log_s, double, double log_jac) {
    const auto v = nd.at_log(log_s);
    return std::exp(log_jac) * v.n / (v.d * std::sqrt(v.d));
  };
  const auto res = detail::integrate_unit(g, detail::left_power(np), *breaks, opts);
  const double c = -a / (4 * std::numbers::sqrt2 * prof.uprime_at_a);
  out.j = c * res.value;
  out.abs_error = std::abs(c) * res.abs_error;
  return out;
}

// J = (−1/(2U′(a))) ∫₀^a (3 + s(U′(a) − U′(s))/U(s)) √s/√U(s) ds, straight from U.
inline StabilityValue eval_J_raw(const NonlinearityParams& np, double omega, double gamma,
                                 const QuadratureOptions& opts = {}) {
  const auto prof = detail::require_profile(np, omega, gamma);
  StabilityValue out;
  out.method = JMethod::Raw;
  if (prof.on_boundary) {
    out.j = detail::kInf;
    out.diverging = true;
    return out;
  }
  const double a = prof.a;
  const auto breaks = detail::dip_breakpoints(np, omega, gamma, a);
  if (!breaks) {
    out.j = -detail::kInf;
    out.diverging = true;
    return out;
  }
  const double upa = prof.uprime_at_a;
  auto f = [&](double s) {
    const auto u = eval_U(np, omega, gamma, s);
    return (3 + s * (upa - u.first_deriv) / u.value) * std::sqrt(s / u.value);
  };
  std::vector<double> left_breaks, right_breaks;
  for (double b : *breaks) {
    if (b < 0.5)
      left_breaks.push_back(std::sqrt(b * a));
    else
      right_breaks.push_back(std::sqrt(a * (1 - b)));
  }
  // s = t² on [0, a/2] and s = a − u² on [a/2, a].
  const auto l = integrate([&](double t) { return 2 * t * f(t * t); }, 0.0, std::sqrt(a / 2), left_breaks, opts);
  const auto r = integrate([&](double u) { return 2 * u * f(a - u * u); }, 0.0, std::sqrt(a / 2), right_breaks, opts);
  const double c = -1 / (2 * upa);
  out.j = c * (l.value + r.value);
  out.abs_error = std::abs(c) * (l.abs_error + r.abs_error);
  return out;
}

// Q = ∫₀^a √s/√U(s) ds = (a/√2) ∫₀¹ D(a,s)^{−1/2} ds.
inline double mass_Q(const NonlinearityParams& np, double omega, double gamma, const QuadratureOptions& opts = {}) {
  const auto prof = detail::require_profile(np, omega, gamma);
  if (prof.on_boundary)
    throw diverging_error("mass is not differentiable on the nonexistence curve at omega=" + std::to_string(omega) +
                          ", gamma=" + std::to_string(gamma));
  const double a = prof.a;
  const auto breaks = detail::dip_breakpoints(np, omega, gamma, a);
  if (!breaks) throw diverging_error("profile sits on a degenerate dip of U");
  const NDForm nd(np, gamma, a);
  auto g = [&](double, double log_s, double, double log_jac) {
    return std::exp(log_jac) / std::sqrt(nd.at_log(log_s).d);
  };
  const auto res = detail::integrate_unit(g, detail::left_power(np), *breaks, opts);
  return a / std::numbers::sqrt2 * res.value;
}

// dQ/dω by central differences with one Richardson step; abs_error is the gap between the
// two step sizes.
inline StabilityValue mass_fd(const NonlinearityParams& np, double omega, double gamma) {
  QuadratureOptions tight;
  tight.rel_tol = 1e-13;
  tight.max_intervals = 4000;
  const double h = std::min(std::max(1e-4 * omega, 1e-6), omega / 4);
  auto diff = [&](double step) {
    return (mass_Q(np, omega + step, gamma, tight) - mass_Q(np, omega - step, gamma, tight)) / (2 * step);
  };
  const double d1 = diff(h);
  const double d2 = diff(h / 2);
  StabilityValue out;
  out.method = JMethod::MassFd;
  out.j = (4 * d2 - d1) / 3;
  out.abs_error = std::abs(d2 - d1);
  return out;
}

// Pieces of the ω = 0 functional: β and N₁, N₂, D₁, D₂ as functions of s.
struct OmegaZeroPieces {
  double beta = 0;
  double a0 = 0;
  double p = 0, q = 0, r = 0;
  double a1 = -1, a3 = 1;

  double n1(double s) const { return n1_log(std::log(s)); }
  double n2(double s) const { return n2_log(std::log(s)); }
  double d1(double s) const { return a1 * (std::pow(s, hq()) - std::pow(s, hp())); }
  double d2(double s) const { return a3 * (std::pow(s, hq()) - std::pow(s, hr())); }

  double n1_log(double ls) const {
    return a1 * ((5 - p) * detail::one_minus_pow(hp(), ls) - (5 - q) * detail::one_minus_pow(hq(), ls));
  }
  double n2_log(double ls) const {
    return a3 * ((5 - r) * detail::one_minus_pow(hr(), ls) - (5 - q) * detail::one_minus_pow(hq(), ls));
  }
  // (D₁ + βD₂)/s^{(p−1)/2}, which stays O(1) as s → 0.
  double scaled_denominator_log(double ls) const {
    const double sq = std::exp((hq() - hp()) * ls);
    const double sr = std::exp((hr() - hp()) * ls);
    return a1 * (sq - 1) + beta * a3 * (sq - sr);
  }

  double hp() const { return (p - 1) / 2; }
  double hq() const { return (q - 1) / 2; }
  double hr() const { return (r - 1) / 2; }
};

inline OmegaZeroPieces omega_zero_pieces(const NonlinearityParams& np, double gamma) {
  const auto a0 = find_a0(np, gamma);
  if (!a0) throw not_found_error("F1 has no positive zero at gamma=" + std::to_string(gamma));
  OmegaZeroPieces out;
  out.a0 = *a0;
  out.beta = (np.p + 1) / (np.r + 1) * std::pow(*a0, (np.r - np.p) / 2);
  out.p = np.p;
  out.q = np.q;
  out.r = np.r;
  out.a1 = np.a1();
  out.a3 = np.a3();
  return out;
}

// J(0,γ) = C ((p+1)/a₀^{(p−1)/2})^{1/2} ∫₀¹ (N₁+βN₂)/(D₁+βD₂)^{3/2} ds in the D* cases, p < 7/3.
inline StabilityValue eval_J0(const NonlinearityParams& np, double gamma, const QuadratureOptions& opts = {}) {
  if (np.sign1 != -1) throw std::domain_error("eval_J0: only defined when the lowest power is defocusing");
  if (!(np.p < 7.0 / 3)) throw unsupported_error("eval_J0: J(omega,gamma) -> -inf as omega -> 0 when p >= 7/3");
  const auto pc = omega_zero_pieces(np, gamma);
  const double a = pc.a0;
  const double upa = -a * eval_F1_deriv(np, gamma, a);
  StabilityValue out;
  out.method = JMethod::OmegaZero;
  if (std::abs(upa) <= boundary_tolerance(np, 0.0, gamma, a)) {
    out.j = detail::kInf;
    out.diverging = true;
    return out;
  }
  auto g = [&](double, double log_s, double, double log_jac) {
    const double num = pc.n1_log(log_s) + pc.beta * pc.n2_log(log_s);
    const double den = pc.scaled_denominator_log(log_s);
    // s^{−3(p−1)/4} is split off the denominator and folded back in here.
    return num * std::exp(log_jac - 1.5 * pc.hp() * log_s) / (den * std::sqrt(den));
  };
  const auto res = detail::integrate_unit(g, detail::left_power(np), {}, opts);
  const double c = -a / (4 * std::numbers::sqrt2 * upa);
  const double pre = c * std::sqrt((np.p + 1) / std::pow(a, pc.hp()));
  out.j = pre * res.value;
  out.abs_error = std::abs(pre) * res.abs_error;
  return out;
}

} // namespace nlsstab
