#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "boundary.hpp"
#include "profile.hpp"
#include "signs.hpp"
#include "special.hpp"
#include "stability.hpp"

namespace nlsstab {

// Independent quadratures of the defining integrals, used to cross-check the closed forms.
namespace oracle {

inline QuadratureOptions tight_options() {
  QuadratureOptions o;
  o.rel_tol = 1e-12;
  o.max_intervals = 4000;
  return o;
}

// ∫₀¹ t^{x−1}(1−t)^{y−1} dt with t = v^{1/x} near 0 and 1 − t = w^{1/y} near 1.
inline double beta_quadrature(double x, double y) {
  const auto opts = tight_options();
  auto left = [&](double v) { return std::pow(1 - std::pow(v, 1 / x), y - 1) / x; };
  auto right = [&](double w) { return std::pow(1 - std::pow(w, 1 / y), x - 1) / y; };
  return integrate(left, 0.0, std::pow(0.5, x), opts).value + integrate(right, 0.0, std::pow(0.5, y), opts).value;
}

// H(x,y) = ∫₀¹ t^{x−1}(1−t^y)/(1−t)^{3/2} dt, with t = v^{1/x} on [0,½] and u = √(1−t) on [½,1].
inline double h_quadrature(double x, double y) {
  const auto opts = tight_options();
  auto left = [&](double v) {
    const double t = std::pow(v, 1 / x);
    return -std::expm1(y * std::log(t)) / (x * std::pow(1 - t, 1.5));
  };
  auto right = [&](double u) {
    const double lt = std::log1p(-u * u);
    return 2 * std::exp((x - 1) * lt) * (-std::expm1(y * lt)) / (u * u);
  };
  return integrate(left, 0.0, std::pow(0.5, x), opts).value + integrate(right, 0.0, std::sqrt(0.5), opts).value;
}

// The two-power integral straight from its definition.
inline double two_power_quadrature(double p, double q) {
  const double hp = (p - 1) / 2, hq = (q - 1) / 2;
  const NonlinearityParams shape{p, q, q + 1, -1, 1};
  auto g = [&](double, double ls, double, double log_jac) {
    const double num = -(5 - p) * detail::one_minus_pow(hp, ls) + (5 - q) * detail::one_minus_pow(hq, ls);
    const double den = detail::one_minus_pow(hq - hp, ls); // (s^{hp} − s^{hq}) / s^{hp}
    return num * std::exp(log_jac - 1.5 * hp * ls) / (den * std::sqrt(den));
  };
  return detail::integrate_unit(g, detail::left_power(shape), {}, tight_options()).value;
}

// Q = ∫₀^a √s/√U(s) ds by composite trapezoid plus one Richardson step, on s = t² over
// [0, a/2] and s = a − u² over [a/2, a]. Works straight from U, not from the N/D form.
inline double mass_trapezoid(const NonlinearityParams& np, double omega, double gamma, int n) {
  const auto prof = find_a(np, omega, gamma);
  if (!prof) throw not_found_error("mass_trapezoid: no profile");
  const double a = prof->a;
  auto f = [&](double s) { return std::sqrt(s / eval_U(np, omega, gamma, s).value); };
  auto left = [&](double t) { return t == 0 ? 0.0 : 2 * t * f(t * t); };
  auto right = [&](double u) { return u == 0 ? 2 * std::sqrt(a / -prof->uprime_at_a) : 2 * u * f(a - u * u); };
  auto trap = [](auto&& g, double hi, int m) {
    const double h = hi / m;
    double sum = 0.5 * (g(0.0) + g(hi));
    for (int k = 1; k < m; ++k) sum += g(k * h);
    return sum * h;
  };
  const double half = std::sqrt(a / 2);
  auto richardson = [&](auto&& g) { return (4 * trap(g, half, 2 * n) - trap(g, half, n)) / 3; };
  return richardson(left) + richardson(right);
}

} // namespace oracle

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::string format_detail(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Residuals of the double-zero conditions along the sampled curve, each divided by the size of
// the terms that cancel (at least 1).
struct CurveResiduals {
  double max_u = 0;      // max |U| / (1 + a)
  double max_uprime = 0; // max |U′|
  double min_u2 = std::numeric_limits<double>::infinity();
  int samples = 0;
};

inline CurveResiduals curve_residuals(const NonlinearityParams& np, int n) {
  const auto [lo, hi] = default_curve_range(np);
  const auto curve = sample_curve(np, lo, hi, n);
  CurveResiduals out;
  for (const auto& s : curve.samples) {
    const auto u = eval_U(np, s.omega_ne, s.gamma_ne, s.a);
    const double scale = std::max(1.0, uprime_scale(np, s.omega_ne, s.gamma_ne, s.a));
    out.max_u = std::max(out.max_u, std::abs(u.value) / ((1 + s.a) * scale));
    out.max_uprime = std::max(out.max_uprime, std::abs(u.first_deriv) / scale);
    out.min_u2 = std::min(out.min_u2, u.second_deriv / scale);
    ++out.samples;
  }
  return out;
}

// An interior query box per case, clear of the nonexistence curve. For the *D cases the ω
// range is a fraction of ω*(γ) row by row.
struct InteriorBox {
  NonlinearityParams np;
  double omega_lo, omega_hi;
  double gamma_lo, gamma_hi;
  bool relative_to_curve = false;
};

inline std::vector<InteriorBox> interior_boxes() {
  return {
      {NonlinearityParams::make(2, 3, 4, 1, 1), 0.2, 2.0, -2.0, 1.0, false},
      {NonlinearityParams::make(3, 5, 7, 1, -1), 0.1, 0.8, -2.0, 2.0, true},
      {NonlinearityParams::make(3, 4, 7, -1, 1), 0.2, 3.0, -3.0, 3.0, false},
      {NonlinearityParams::make(3, 4, 7, -1, -1), 0.1, 0.8, -5.0, -2.5, true},
  };
}

inline std::vector<QueryPoint> box_points(const InteriorBox& box, int n) {
  std::vector<QueryPoint> out;
  for (int i = 0; i < n; ++i) {
    const double g = box.gamma_lo + (box.gamma_hi - box.gamma_lo) * i / (n - 1);
    double scale = 1;
    if (box.relative_to_curve) scale = omega_star(box.np, g).value();
    for (int j = 0; j < n; ++j) {
      const double w = (box.omega_lo + (box.omega_hi - box.omega_lo) * j / (n - 1)) * scale;
      out.push_back({w, g});
    }
  }
  return out;
}

struct TripleMethodStats {
  double max_raw = 0;    // max relative gap transformed vs raw
  double max_massfd = 0; // max relative gap transformed vs mass_fd
  int points = 0;
};

inline TripleMethodStats triple_method(const InteriorBox& box, int n) {
  TripleMethodStats out;
  for (const auto& pt : box_points(box, n)) {
    const double j = eval_J(box.np, pt.omega, pt.gamma).j;
    const double raw = eval_J_raw(box.np, pt.omega, pt.gamma).j;
    const double fd = mass_fd(box.np, pt.omega, pt.gamma).j;
    out.max_raw = std::max(out.max_raw, std::abs(j - raw) / std::abs(j));
    out.max_massfd = std::max(out.max_massfd, std::abs(j - fd) / std::abs(j));
    ++out.points;
  }
  return out;
}

inline GeneralizedPolynomial random_generalized_polynomial(std::mt19937_64& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_real_distribution<double> expo(0.0, 10.0), coef(-3.0, 3.0);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    double c = coef(rng);
    if (c == 0) c = 1;
    terms.push_back({c, expo(rng)});
  }
  return GeneralizedPolynomial::from_terms(std::move(terms));
}

// One random (params, γ) draw plus two ω values with a profile at both.
struct MonotoneDraw {
  NonlinearityParams np;
  double omega1, omega2, gamma1, gamma2;
};

inline NonlinearityParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double p = 1.2 + 3.0 * u(rng);
  const double q = p + 0.2 + 2.5 * u(rng);
  const double r = q + 0.2 + 3.0 * u(rng);
  return NonlinearityParams::make(p, q, r, u(rng) < 0.5 ? 1 : -1, u(rng) < 0.5 ? 1 : -1);
}

// Checks the orderings of a in ω and in γ on n random draws; returns the number of violations
// and how many pairs were actually compared. Across the FF curve a jumps upward, so pairs on
// either side still obey the ordering.
struct MonotoneStats {
  int omega_pairs = 0, omega_violations = 0;
  int gamma_pairs = 0, gamma_violations = 0;
};

inline MonotoneStats monotonicity_of_a(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lw(-2.0, 1.0), gg(-4.0, 4.0);
  MonotoneStats out;
  auto usable = [](const std::optional<ProfileResult>& r) { return r && r->exists; };
  // When the varied term is below rounding at s = a (e.g. a ~ 1e−13), both roots land on the
  // same double; only a strict reversal beyond that counts.
  auto ordered = [](double lo, double hi) { return lo <= hi * (1 + 1e-12); };
  for (int k = 0; k < n; ++k) {
    const auto np = random_params(rng);
    // ω-ordering at fixed γ.
    {
      const double g = gg(rng);
      double w1 = std::pow(10.0, lw(rng)), w2 = std::pow(10.0, lw(rng));
      if (w1 > w2) std::swap(w1, w2);
      const auto a1 = find_a(np, w1, g), a2 = find_a(np, w2, g);
      if (usable(a1) && usable(a2) && w1 < w2) {
        ++out.omega_pairs;
        if (!ordered(a1->a, a2->a)) ++out.omega_violations;
      }
    }
    // γ-ordering at fixed ω.
    {
      const double w = std::pow(10.0, lw(rng));
      double g1 = gg(rng), g2 = gg(rng);
      if (g1 > g2) std::swap(g1, g2);
      const auto a1 = find_a(np, w, g1), a2 = find_a(np, w, g2);
      if (usable(a1) && usable(a2) && g1 < g2) {
        ++out.gamma_pairs;
        if (!ordered(a1->a, a2->a)) ++out.gamma_violations;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Suites for the `verify` command.

inline std::vector<CheckResult> verify_special() {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  add("beta(1/2,1/2) = pi", rel_diff(beta_fn(0.5, 0.5), std::numbers::pi) < 1e-13,
      format_detail("%.17g", beta_fn(0.5, 0.5)));
  add("beta(1,1/2) = 2", rel_diff(beta_fn(1, 0.5), 2) < 1e-13, format_detail("%.17g", beta_fn(1, 0.5)));
  {
    const double q = oracle::beta_quadrature(0.25, 0.5);
    add("beta(1/4,1/2) vs quadrature", rel_diff(beta_fn(0.25, 0.5), q) < 1e-9,
        format_detail("closed %.15g quad %.15g", beta_fn(0.25, 0.5), q));
  }
  {
    const double h = 1e-5;
    const double fd = (beta_fn(0.7 + h, 0.5) - beta_fn(0.7 - h, 0.5)) / (2 * h);
    add("dbeta_dx(0.7,0.5) vs central difference", rel_diff(dbeta_dx(0.7, 0.5), fd) < 1e-7,
        format_detail("%.12g vs %.12g", dbeta_dx(0.7, 0.5), fd));
  }
  {
    double worst = 0;
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) {
        const double x = 0.1 * std::pow(50.0, i / 9.0), y = 0.1 * std::pow(50.0, j / 9.0);
        const double h = h_fn(x, y);
        worst = std::max(worst, std::abs(h - oracle::h_quadrature(x, y)) / (1 + std::abs(h)));
      }
    add("H closed form vs quadrature, 10x10 grid", worst <= 1e-8, format_detail("max scaled gap %.3g", worst));
  }
  add("H(1/2,1/2) = 2", std::abs(h_fn(0.5, 0.5) - 2) < 1e-13, format_detail("%.17g", h_fn(0.5, 0.5)));
  add("H(1,1) = 2", std::abs(h_fn(1, 1) - 2) < 1e-13, format_detail("%.17g", h_fn(1, 1)));
  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> up(1.1, 2.25), dq(0.1, 3.0);
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const double p = up(rng), q = p + dq(rng);
      const double c = two_power_integral(p, q), d = oracle::two_power_quadrature(p, q);
      worst = std::max(worst, std::abs(c - d) / std::max(1.0, std::abs(c)));
    }
    add("two-power closed form vs quadrature, 20 random", worst <= 1e-6, format_detail("max gap %.3g", worst));
  }
  add("two-power integral vanishes at 2p+q = 7", two_power_integral(2, 3) == 0.0,
      format_detail("%.3g", two_power_integral(2, 3)));
  {
    int bad = 0;
    for (int k = 0; k < 50; ++k) {
      const double b = 0.05 * std::pow(400.0, k / 49.0);
      const auto bd = beta_deriv_bounds(b);
      const double d = dbeta_dx(b + 0.5, 0.5);
      if (!(bd.lower < d && d < bd.upper)) ++bad;
    }
    add("Beta-derivative bounds hold strictly, 50 samples", bad == 0, format_detail("%g violations", bad));
  }
  return out;
}

inline std::vector<CheckResult> verify_signs() {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(11);
  int bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto gp = random_generalized_polynomial(rng);
    if (gp.empty()) continue;
    if (count_positive_roots_sampled(gp, 10.0, 400) > sign_changes(gp)) ++bad;
  }
  out.push_back({"sampled positive roots <= coefficient sign changes (1000 random)", bad == 0,
                 format_detail("%g counterexamples", bad)});

  std::uniform_real_distribution<double> u(0.0, 2.0);
  int non_monotone = 0;
  for (int k = 0; k < 50; ++k) {
    const double p2 = u(rng), p1 = p2 + u(rng), q2 = p1 + 0.1 + u(rng), q1 = q2 + 0.1 + u(rng);
    double prev = -std::numeric_limits<double>::infinity();
    for (int i = 1; i < 100; ++i) {
      const double h = ratio_h(i / 100.0, p1, q1, p2, q2);
      if (!(h > prev)) ++non_monotone;
      prev = h;
    }
  }
  out.push_back({"ratio h increasing for p1 >= p2, q1 > q2", non_monotone == 0,
                 format_detail("%g decreasing steps", non_monotone)});
  return out;
}

inline std::vector<CheckResult> verify_boundary() {
  std::vector<CheckResult> out;
  const auto ff = NonlinearityParams::make(2, 3, 4, 1, 1);
  const auto e = endpoints(ff);
  out.push_back({"FF(2,3,4) a_sharp = 5/9", std::abs(*e.endpoint_a - 5.0 / 9) < 1e-12,
                 format_detail("%.17g", *e.endpoint_a)});
  out.push_back({"FF(2,3,4) gamma1 = 4/sqrt(5)", std::abs(*e.gamma1 - 4 / std::sqrt(5.0)) < 1e-12,
                 format_detail("%.17g", *e.gamma1)});
  const auto dd = NonlinearityParams::make(3, 4, 7, -1, -1);
  const auto ed = endpoints(dd);
  out.push_back({"DD(3,4,7) a_b = sqrt(2/3), omega_ne(a_b) = 0",
                 std::abs(*ed.endpoint_a - std::sqrt(2.0 / 3)) < 1e-12 &&
                     std::abs(gamma_omega_ne(dd, *ed.endpoint_a).omega_ne) < 1e-12,
                 format_detail("%.17g", *ed.endpoint_a)});
  for (const auto& np : {ff, NonlinearityParams::make(3, 5, 7, 1, -1), dd}) {
    const auto r = curve_residuals(np, 200);
    const bool pass = r.max_u <= 1e-10 && r.max_uprime <= 1e-10 && r.min_u2 >= -1e-10;
    out.push_back({std::string(to_string(np.label())) + " curve is a double zero of U (200 samples)", pass,
                   format_detail("|U| %.2g |U'| %.2g min U'' %.2g", r.max_u, r.max_uprime, r.min_u2)});
    const auto [lo, hi] = default_curve_range(np);
    double worst = 0;
    for (const auto& s : sample_curve(np, lo, hi, 50).samples)
      if (const auto w = omega_star(np, s.gamma_ne)) worst = std::max(worst, rel_diff(*w, s.omega_ne));
    out.push_back({std::string(to_string(np.label())) + " omega_star round trip", worst < 1e-9,
                   format_detail("max rel gap %.3g", worst)});
  }
  return out;
}

inline std::vector<CheckResult> verify_profile() {
  std::vector<CheckResult> out;
  const auto ff = NonlinearityParams::make(2, 3, 4, 1, 1);
  const auto a = find_a(ff, 16.0 / 15, 0);
  out.push_back({"FF(2,3,4) a(16/15, 0) = 1", a && std::abs(a->a - 1) < 1e-13, format_detail("%.17g", a ? a->a : -1)});
  const auto bp = gamma_omega_ne(ff, 0.3);
  const auto on = find_a(ff, bp.omega_ne, bp.gamma_ne);
  out.push_back({"point on the curve reports on_boundary", on && on->on_boundary, ""});
  const auto df = NonlinearityParams::make(2, 3, 4, -1, 1);
  const auto a0 = find_a0(df, 0);
  out.push_back({"DF(2,3,4) a0(0) = 5/3", a0 && std::abs(*a0 - 5.0 / 3) < 1e-12, format_detail("%.17g", a0.value_or(-1))});
  const auto m = monotonicity_of_a(1000, 3);
  out.push_back({"a increasing in omega and gamma (1000 random draws)", m.omega_violations == 0 && m.gamma_violations == 0,
                 format_detail("%g + %g violations", m.omega_violations, m.gamma_violations)});
  return out;
}

inline std::vector<CheckResult> verify_stability() {
  std::vector<CheckResult> out;
  for (const auto& box : interior_boxes()) {
    const auto s = triple_method(box, 5);
    out.push_back({std::string(to_string(box.np.label())) + " transformed vs raw vs mass_fd (5x5)",
                   s.max_raw <= 1e-4 && s.max_massfd <= 1e-3,
                   format_detail("raw %.2g mass_fd %.2g", s.max_raw, s.max_massfd)});
  }
  {
    const auto fd = NonlinearityParams::make(3, 5, 7, 1, -1);
    int bad = 0;
    for (int i = 0; i < 10; ++i) {
      const double g = -5 + i * 10.0 / 9;
      const double ws = omega_star(fd, g).value();
      for (int j = 1; j <= 10; ++j)
        if (!(eval_J(fd, ws * j / 11.0, g).j > 0)) ++bad;
    }
    out.push_back({"FD(3,5,7) J > 0 on the existence region", bad == 0, format_detail("%g failures", bad)});
  }
  {
    const auto df = NonlinearityParams::make(3, 5, 7, -1, 1);
    int bad = 0;
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j)
        if (!(eval_J(df, 0.05 + j * (10 - 0.05) / 9, -5 + i * 10.0 / 9).j < 0)) ++bad;
    out.push_back({"DF(3,5,7) J < 0 everywhere", bad == 0, format_detail("%g failures", bad)});
  }
  return out;
}

inline std::vector<CheckResult> verify_asymptotics() {
  std::vector<CheckResult> out;
  auto expect = [&](const char* name, NonlinearityParams np, LimitDirection d, double g, LimitClass want) {
    const auto got = classify_limit(np, d, g);
    out.push_back({name, got == want, std::string(to_string(got))});
  };
  expect("FF(3,4,5) omega->0 is +inf", NonlinearityParams::make(3, 4, 5, 1, 1), LimitDirection::OmegaToZero, 0,
         LimitClass::PosInfinity);
  expect("FF(2,3,4) omega->0 is 0+", NonlinearityParams::make(2, 3, 4, 1, 1), LimitDirection::OmegaToZero, 0,
         LimitClass::ZeroPlus);
  expect("FF(3,6,7) gamma->-inf is 0-", NonlinearityParams::make(3, 6, 7, 1, 1), LimitDirection::GammaToNegInf, 1,
         LimitClass::ZeroMinus);
  expect("DF(3,4,7) gamma->-inf is 0+", NonlinearityParams::make(3, 4, 7, -1, 1), LimitDirection::GammaToNegInf, 1,
         LimitClass::ZeroPlus);

  // Numeric trend along ω → 0 for FF(2,3,4): positive, shrinking, slope near (7−3p)/4.
  const auto ff = NonlinearityParams::make(2, 3, 4, 1, 1);
  std::vector<double> la, lj;
  bool positive_shrinking = true;
  double prev = std::numeric_limits<double>::infinity();
  for (double w : {1e-3, 1e-4, 1e-5, 1e-6}) {
    const double j = eval_J(ff, w, 0).j;
    positive_shrinking = positive_shrinking && j > 0 && j < prev;
    prev = j;
    la.push_back(std::log(find_a(ff, w, 0)->a));
    lj.push_back(std::log(std::abs(j)));
  }
  const double slope = (lj.back() - lj.front()) / (la.back() - la.front());
  const double want = *asymptotic_exponent(ff, LimitDirection::OmegaToZero, 0);
  out.push_back({"FF(2,3,4) omega->0 trend and rate", positive_shrinking && std::abs(slope / want - 1) < 0.1,
                 format_detail("slope %.4g vs %.4g", slope, want)});
  return out;
}

inline std::vector<std::string> suite_names() {
  return {"special", "signs", "boundary", "profile", "stability", "asymptotics"};
}

inline std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "special") return verify_special();
  if (name == "signs") return verify_signs();
  if (name == "boundary") return verify_boundary();
  if (name == "profile") return verify_profile();
  if (name == "stability") return verify_stability();
  if (name == "asymptotics") return verify_asymptotics();
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace nlsstab
