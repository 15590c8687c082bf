#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace nlsstab {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0;
  int max_intervals = 2000;
};

struct QuadratureResult {
  double value = 0;
  double abs_error = 0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> fv1{}, fv2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double result = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50 * eps)) err = std::max(eps * 50 * resabs, err);
  return {a, b, result, err};
}

} // namespace detail

// Globally adaptive Gauss–Kronrod: always bisects the panel with the largest error estimate.
// `points` are extra breakpoints strictly inside (a,b); the integrand is never evaluated at
// a, b or any breakpoint.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, std::vector<double> points,
                           const QuadratureOptions& opts = {}) {
  if (!(std::isfinite(a) && std::isfinite(b))) throw std::domain_error("integrate: limits must be finite");
  if (a == b) return {0, 0, 0, true};
  const double sign = b > a ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);

  std::erase_if(points, [&](double x) { return !(x > a && x < b); });
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::priority_queue<detail::Panel> heap;
  double total = 0, error = 0;
  double lo = a;
  points.push_back(b);
  for (double hi : points) {
    auto p = detail::gk15(f, lo, hi);
    total += p.value;
    error += p.error;
    heap.push(p);
    lo = hi;
  }

  auto done = [&] { return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  while (!done() && static_cast<int>(heap.size()) < opts.max_intervals) {
    const auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    // Stop splitting once panels shrink to rounding size.
    if (!(mid > worst.a && mid < worst.b)) break;
    heap.pop();
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to drop the drift of the incremental updates.
  QuadratureResult out;
  out.intervals = static_cast<int>(heap.size());
  double v = 0, e = 0;
  while (!heap.empty()) {
    v += heap.top().value;
    e += heap.top().error;
    heap.pop();
  }
  out.value = sign * v;
  out.abs_error = e;
  out.converged = e <= std::max(opts.abs_tol, opts.rel_tol * std::abs(v)) || e == 0.0;
  return out;
}

template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  return integrate(std::forward<F>(f), a, b, std::vector<double>{}, opts);
}

} // namespace nlsstab
