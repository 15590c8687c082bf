#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "model.hpp"
#include "roots.hpp"

namespace nlsstab {

struct BoundaryPoint {
  double a = 0;
  double omega_ne = 0;
  double gamma_ne = 0;
};

// (ω_ne(a), γ_ne(a)): the unique (ω,γ) for which s = a is a double zero of U.
inline BoundaryPoint gamma_omega_ne(const NonlinearityParams& np, double a) {
  if (!(a > 0)) throw std::domain_error("gamma_omega_ne: a must be positive");
  const double p = np.p, q = np.q, r = np.r, a1 = np.a1(), a3 = np.a3();
  BoundaryPoint out{a, 0, 0};
  out.omega_ne = 2 * a1 * (q - p) / ((q - 1) * (p + 1)) * std::pow(a, (p - 1) / 2) -
                 2 * a3 * (r - q) / ((q - 1) * (r + 1)) * std::pow(a, (r - 1) / 2);
  out.gamma_ne = (q + 1) / (q - 1) *
                 (a1 * (p - 1) / (p + 1) * std::pow(a, (p - q) / 2) + a3 * (r - 1) / (r + 1) * std::pow(a, (r - q) / 2));
  return out;
}

// Valid a-range of the curve for each case. FF: (0, a♯], FD: (0, ∞), DF: empty, DD: (a_b, ∞).
struct CurveEndpoints {
  std::optional<double> endpoint_a;
  std::optional<double> gamma1;
  double a_min = 0;
  double a_max = std::numeric_limits<double>::infinity();
  bool empty = false;
  std::string description;
  int kind = 0; // 0 = closed at the top (FF), 1 = whole half-line (FD), 2 = open at the bottom (DD)

  bool contains(double a) const {
    if (empty) return false;
    switch (kind) {
    case 0: return a > 0 && a <= a_max;
    case 1: return a > 0;
    default: return a > a_min;
    }
  }
};

inline CurveEndpoints endpoints(const NonlinearityParams& np) {
  np.validate();
  const double p = np.p, q = np.q, r = np.r;
  CurveEndpoints out;
  switch (np.label()) {
  case CaseLabel::FF: {
    const double a = std::pow((q - p) * (p - 1) * (r + 1) / ((r - q) * (r - 1) * (p + 1)), 2 / (r - p));
    out.endpoint_a = a;
    out.gamma1 = gamma_omega_ne(np, a).gamma_ne;
    out.a_max = a;
    out.kind = 0;
    out.description = "0 < a <= a_sharp";
    break;
  }
  case CaseLabel::FD:
    out.kind = 1;
    out.description = "0 < a < inf";
    break;
  case CaseLabel::DF:
    out.empty = true;
    out.description = "empty";
    break;
  case CaseLabel::DD: {
    const double a = std::pow((q - p) * (r + 1) / ((r - q) * (p + 1)), 2 / (r - p));
    out.endpoint_a = a;
    out.gamma1 = gamma_omega_ne(np, a).gamma_ne;
    out.a_min = a;
    out.kind = 2;
    out.description = "a_b < a < inf";
    break;
  }
  }
  return out;
}

struct BoundaryCurve {
  std::vector<BoundaryPoint> samples;
  std::optional<double> endpoint_a;
  std::optional<double> gamma1;
};

// n geometrically spaced samples of the curve over [a_lo, a_hi] clipped to the valid range.
inline BoundaryCurve sample_curve(const NonlinearityParams& np, double a_lo, double a_hi, int n) {
  if (n < 2) throw std::domain_error("sample_curve: need at least two samples");
  if (!(a_lo > 0 && a_lo < a_hi)) throw std::domain_error("sample_curve: need 0 < a_lo < a_hi");
  const auto ends = endpoints(np);
  BoundaryCurve out;
  out.endpoint_a = ends.endpoint_a;
  out.gamma1 = ends.gamma1;
  if (ends.empty) return out;
  a_hi = std::min(a_hi, ends.a_max);
  if (ends.kind == 2) a_lo = std::max(a_lo, ends.a_min * (1 + 1e-12));
  if (!(a_lo < a_hi)) return out;
  const double ratio = std::pow(a_hi / a_lo, 1.0 / (n - 1));
  for (int i = 0; i < n; ++i) {
    const double a = i == n - 1 ? a_hi : a_lo * std::pow(ratio, i);
    out.samples.push_back(gamma_omega_ne(np, a));
  }
  return out;
}

// A sensible a-window when the caller has none: three decades below a♯ for FF, three
// decades above a_b for DD, [1e−3, 1e2] for FD.
inline std::pair<double, double> default_curve_range(const NonlinearityParams& np) {
  const auto ends = endpoints(np);
  switch (ends.kind) {
  case 0: return {*ends.endpoint_a * 1e-3, *ends.endpoint_a};
  case 1: return {1e-3, 1e2};
  default: return {*ends.endpoint_a * (1 + 1e-9), *ends.endpoint_a * 1e3};
  }
}

// The a on the curve at a given γ. γ_ne is decreasing along the valid range, so the
// crossing is found by bisection in a after growing a bracket outward.
inline std::optional<double> a_star(const NonlinearityParams& np, double gamma) {
  if (!std::isfinite(gamma)) throw std::domain_error("a_star: gamma must be finite");
  const auto ends = endpoints(np);
  if (ends.empty) return std::nullopt;
  auto g = [&](double a) { return gamma_omega_ne(np, a).gamma_ne - gamma; };

  double lo = 1.0, hi = 1.0;
  switch (ends.kind) {
  case 0:
    if (gamma < *ends.gamma1) return std::nullopt;
    lo = hi = *ends.endpoint_a;
    break;
  case 2:
    if (!(gamma < *ends.gamma1)) return std::nullopt;
    lo = *ends.endpoint_a;
    hi = 2 * lo;
    break;
  default:
    break;
  }
  while (g(lo) < 0) {
    hi = lo;
    lo *= 0.5;
    if (lo < 1e-300) return std::nullopt;
  }
  while (g(hi) > 0) {
    lo = hi;
    hi *= 2;
    if (hi > 1e300) return std::nullopt;
  }
  if (g(lo) == 0) return lo;
  return bisect(g, lo, hi);
}

// ω*(γ), empty when the line of fixed γ misses the curve.
inline std::optional<double> omega_star(const NonlinearityParams& np, double gamma) {
  const auto a = a_star(np, gamma);
  if (!a) return std::nullopt;
  return gamma_omega_ne(np, *a).omega_ne;
}

} // namespace nlsstab
