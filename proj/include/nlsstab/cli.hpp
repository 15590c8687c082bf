#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asymptotics.hpp"
#include "boundary.hpp"
#include "diagram.hpp"
#include "model.hpp"
#include "profile.hpp"
#include "stability.hpp"
#include "verify.hpp"

namespace nlsstab::cli {

// Thrown for bad argument values detected after parsing; maps to exit code 2.
class usage_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Accepts "+1", "1", "+", "f" for focusing and "-1", "-", "d" for defocusing.
inline int parse_sign(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+" || s == "f" || s == "F") return 1;
  if (s == "-1" || s == "-" || s == "d" || s == "D") return -1;
  throw usage_error("invalid sign '" + s + "' (expected +1, -1, f or d)");
}

inline std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) v = 0; // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct RunConfig {
  std::string subcommand;
  double p = 0, q = 0, r = 0;
  std::string s1, s3;
  double omega = 1, gamma = 0;
  double a1 = 1, a2 = 0, a3 = 1;
  double omega_min = 0.01, omega_max = 2, gamma_min = -5, gamma_max = 5;
  std::size_t nx = 100, ny = 100;
  std::vector<double> levels{0.0};
  std::string grid_out, contours_out, curve_out;
  std::optional<double> a_lo, a_hi;
  int samples = 200;
  unsigned jobs = 0;
  std::string suite = "all";
  double rel_tol = 1e-9;
  int max_intervals = 2000;
  bool no_timing = false;

  NonlinearityParams params() const {
    NonlinearityParams np{p, q, r, parse_sign(s1), parse_sign(s3)};
    try {
      np.validate();
    } catch (const std::domain_error& e) {
      throw usage_error(e.what());
    }
    return np;
  }

  QuadratureOptions quadrature() const {
    if (!(rel_tol > 0)) throw usage_error("--rel-tol must be positive");
    QuadratureOptions o;
    o.rel_tol = rel_tol;
    o.max_intervals = max_intervals;
    return o;
  }
};

namespace detail {

inline void line(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << ": " << value << '\n';
}
inline void line(std::ostream& out, const std::string& key, double value) { line(out, key, fmt(value)); }

inline void print_value(std::ostream& out, const std::string& name, const StabilityValue& v) {
  out << name << ": J=" << fmt(v.j) << " err=" << fmt(v.abs_error) << (v.diverging ? " diverging" : "") << '\n';
}

inline int cmd_classify(const RunConfig& c, std::ostream& out) {
  const auto np = c.params();
  const auto ends = endpoints(np);
  line(out, "case", std::string(to_string(np.label())));
  line(out, "curve", ends.description);
  if (ends.endpoint_a) {
    const auto pt = gamma_omega_ne(np, *ends.endpoint_a);
    line(out, np.label() == CaseLabel::FF ? "a_sharp" : "a_b", pt.a);
    line(out, "gamma1", *ends.gamma1);
    line(out, "omega_ne_endpoint", pt.omega_ne);
  }
  return 0;
}

inline int cmd_normalize(const RunConfig& c, std::ostream& out) {
  ScalingReduction red;
  try {
    red = normalize(c.a1, c.a2, c.a3, c.p, c.q, c.r);
  } catch (const std::domain_error& e) {
    throw usage_error(e.what());
  }
  line(out, "case", std::string(to_string(red.normalized.label())));
  line(out, "kappa", red.kappa);
  line(out, "lambda", red.lambda);
  line(out, "b", red.b);
  line(out, "c", red.c);
  line(out, "d", red.d);
  line(out, "gamma", red.gamma);
  return 0;
}

inline int cmd_profile(const RunConfig& c, std::ostream& out) {
  const auto np = c.params();
  if (!(c.omega > 0)) throw usage_error("--omega must be positive");
  const auto prof = find_a(np, c.omega, c.gamma);
  if (!prof) {
    line(out, "exists", "false");
    return 0;
  }
  line(out, "exists", prof->exists ? "true" : "false");
  line(out, "on_boundary", prof->on_boundary ? "true" : "false");
  line(out, "a", prof->a);
  line(out, "uprime_at_a", prof->uprime_at_a);
  return 0;
}

inline int cmd_curve(const RunConfig& c, std::ostream& out) {
  const auto np = c.params();
  if (c.samples < 2) throw usage_error("--samples must be at least 2");
  const auto ends = endpoints(np);
  BoundaryCurve curve;
  if (!ends.empty) {
    const auto [lo, hi] = default_curve_range(np);
    curve = sample_curve(np, c.a_lo.value_or(lo), c.a_hi.value_or(hi), c.samples);
  }
  if (c.curve_out.empty()) {
    write_curve_csv(curve, out);
  } else {
    export_curve_csv(curve, c.curve_out);
    line(out, "samples", std::to_string(curve.samples.size()));
    line(out, "written", c.curve_out);
  }
  return 0;
}

inline int cmd_omega_star(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto np = c.params();
  const auto w = omega_star(np, c.gamma);
  if (!w) {
    err << "error: the line gamma = " << fmt(c.gamma) << " does not meet the nonexistence curve\n";
    return 1;
  }
  line(out, "a_star", *a_star(np, c.gamma));
  line(out, "omega_star", *w);
  return 0;
}

inline int cmd_eval_j(const RunConfig& c, std::ostream& out) {
  const auto np = c.params();
  if (!(c.omega > 0)) throw usage_error("--omega must be positive");
  const auto opts = c.quadrature();
  const auto t = eval_J(np, c.omega, c.gamma, opts);
  if (t.diverging) throw diverging_error("J diverges: (omega, gamma) lies on the nonexistence curve");
  print_value(out, std::string(to_string(JMethod::Transformed)), t);
  print_value(out, std::string(to_string(JMethod::Raw)), eval_J_raw(np, c.omega, c.gamma, opts));
  print_value(out, std::string(to_string(JMethod::MassFd)), mass_fd(np, c.omega, c.gamma));
  line(out, "verdict", std::string(to_string(verdict(t))));
  return 0;
}

inline int cmd_eval_j0(const RunConfig& c, std::ostream& out) {
  const auto np = c.params();
  const auto v = eval_J0(np, c.gamma, c.quadrature());
  print_value(out, std::string(to_string(JMethod::OmegaZero)), v);
  line(out, "verdict", std::string(to_string(verdict(v))));
  return 0;
}

inline int cmd_limits(const RunConfig& c, std::ostream& out) {
  const auto np = c.params();
  for (const auto d : kAllDirections) {
    const bool omega_dir = d == LimitDirection::OmegaToZero || d == LimitDirection::OmegaToInf;
    out << to_string(d) << ": ";
    try {
      out << to_string(classify_limit(np, d, omega_dir ? c.gamma : c.omega));
      if (const auto k = asymptotic_exponent(np, d, c.gamma)) out << " exponent=" << fmt(*k);
    } catch (const unsupported_error&) {
      out << "unsupported";
    } catch (const no_statement_error&) {
      out << "no-statement";
    }
    out << '\n';
  }
  return 0;
}

inline int cmd_guarantees(const RunConfig& c, std::ostream& out) {
  for (const auto& g : sign_guarantees(c.params())) out << to_string(g.statement) << ": " << g.region << '\n';
  return 0;
}

inline int cmd_diagram(const RunConfig& c, std::ostream& out) {
  const auto np = c.params();
  if (c.nx < 2 || c.ny < 2) throw usage_error("--nx and --ny must be at least 2");
  if (!(c.omega_min > 0 && c.omega_min < c.omega_max)) throw usage_error("need 0 < --omega-min < --omega-max");
  if (!(c.gamma_min < c.gamma_max)) throw usage_error("need --gamma-min < --gamma-max");
  const auto grid = sweep_grid(np, {c.omega_min, c.omega_max}, {c.gamma_min, c.gamma_max}, c.nx, c.ny, c.jobs);
  const auto contours = extract_contours(grid, c.levels);
  std::size_t pos = 0, neg = 0, none = 0, inf = 0;
  for (const double v : grid.values) {
    if (is_nonexistent(v)) ++none;
    else if (is_divergent(v)) ++inf;
    else if (v > 0) ++pos;
    else if (v < 0) ++neg;
  }
  line(out, "case", std::string(to_string(np.label())));
  line(out, "cells", std::to_string(grid.values.size()));
  line(out, "positive", std::to_string(pos));
  line(out, "negative", std::to_string(neg));
  line(out, "nonexistent", std::to_string(none));
  line(out, "divergent", std::to_string(inf));
  for (const auto& set : contours) {
    std::size_t pts = 0;
    for (const auto& p : set.paths) pts += p.size();
    out << "level " << fmt(set.level) << ": paths=" << set.paths.size() << " points=" << pts << '\n';
  }
  if (!c.grid_out.empty()) {
    export_grid_csv(grid, c.grid_out);
    line(out, "grid", c.grid_out);
  }
  if (!c.contours_out.empty()) {
    export_contours_json(contours, np, c.contours_out);
    line(out, "contours", c.contours_out);
  }
  return 0;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(c.suite);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  int failed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
    failed += !r.pass;
  }
  out << "checks: " << results.size() << " failed: " << failed << '\n';
  return failed ? 1 : 0;
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Standing-wave existence and stability for triple-power NLS"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--no-timing", cfg.no_timing, "Suppress the trailing elapsed-time line");

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "Lowest exponent")->required();
    sub->add_option("--q", cfg.q, "Middle exponent")->required();
    sub->add_option("--r", cfg.r, "Highest exponent")->required();
    sub->add_option("--s1", cfg.s1, "Sign of the lowest power (+1/-1/f/d)")->required();
    sub->add_option("--s3", cfg.s3, "Sign of the highest power (+1/-1/f/d)")->required();
  };
  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--rel-tol", cfg.rel_tol, "Quadrature relative tolerance");
    sub->add_option("--max-intervals", cfg.max_intervals, "Quadrature interval budget");
  };
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&cfg, name] { cfg.subcommand = name; });
    return s;
  };

  auto* classify = sub("classify", "Case label and curve endpoint constants");
  add_params(classify);

  auto* norm = sub("normalize", "Scale general coefficients to |a1| = |a3| = 1");
  norm->add_option("--a1", cfg.a1, "Coefficient of the lowest power")->required();
  norm->add_option("--a2", cfg.a2, "Coefficient of the middle power")->required();
  norm->add_option("--a3", cfg.a3, "Coefficient of the highest power")->required();
  norm->add_option("--p", cfg.p)->required();
  norm->add_option("--q", cfg.q)->required();
  norm->add_option("--r", cfg.r)->required();

  auto* prof = sub("profile-a", "Amplitude a(omega, gamma) and U'(a)");
  add_params(prof);
  prof->add_option("--omega", cfg.omega)->required();
  prof->add_option("--gamma", cfg.gamma)->required();

  auto* curve = sub("curve-ne", "Sample the nonexistence curve as CSV");
  add_params(curve);
  curve->add_option("--a-lo", cfg.a_lo, "Smallest a sampled");
  curve->add_option("--a-hi", cfg.a_hi, "Largest a sampled");
  curve->add_option("--samples", cfg.samples, "Number of samples")->capture_default_str();
  curve->add_option("--out", cfg.curve_out, "Write CSV here instead of stdout");

  auto* wstar = sub("omega-star", "Where the line of fixed gamma meets the nonexistence curve");
  add_params(wstar);
  wstar->add_option("--gamma", cfg.gamma)->required();

  auto* ej = sub("eval-j", "J by the transformed, raw and mass-difference methods");
  add_params(ej);
  ej->add_option("--omega", cfg.omega)->required();
  ej->add_option("--gamma", cfg.gamma)->required();
  add_tolerances(ej);

  auto* ej0 = sub("eval-j0", "J(0, gamma) for the defocusing-bottom cases");
  add_params(ej0);
  ej0->add_option("--gamma", cfg.gamma)->required();
  add_tolerances(ej0);

  auto* lim = sub("limits", "Limit class of J in every direction");
  add_params(lim);
  lim->add_option("--omega", cfg.omega, "Fixed omega for the gamma directions")->capture_default_str();
  lim->add_option("--gamma", cfg.gamma, "Fixed gamma for the omega directions")->capture_default_str();

  auto* guar = sub("guarantees", "Sign statements that hold for the exponents");
  add_params(guar);

  auto* diag = sub("diagram", "Sweep J over a grid, extract level curves");
  add_params(diag);
  diag->add_option("--omega-min", cfg.omega_min)->capture_default_str();
  diag->add_option("--omega-max", cfg.omega_max)->capture_default_str();
  diag->add_option("--gamma-min", cfg.gamma_min)->capture_default_str();
  diag->add_option("--gamma-max", cfg.gamma_max)->capture_default_str();
  diag->add_option("--nx", cfg.nx, "Grid points along omega")->capture_default_str();
  diag->add_option("--ny", cfg.ny, "Grid points along gamma")->capture_default_str();
  diag->add_option("--levels", cfg.levels, "Contour levels")->capture_default_str();
  diag->add_option("--grid-out", cfg.grid_out, "Grid CSV path");
  diag->add_option("--contours-out", cfg.contours_out, "Contour JSON path");
  diag->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->capture_default_str();

  auto* ver = sub("verify", "Run the identity and proposition check suites");
  ver->add_option("--suite", cfg.suite, "special|signs|boundary|profile|stability|asymptotics|all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    const auto& s = cfg.subcommand;
    if (s == "classify") code = detail::cmd_classify(cfg, out);
    else if (s == "normalize") code = detail::cmd_normalize(cfg, out);
    else if (s == "profile-a") code = detail::cmd_profile(cfg, out);
    else if (s == "curve-ne") code = detail::cmd_curve(cfg, out);
    else if (s == "omega-star") code = detail::cmd_omega_star(cfg, out, err);
    else if (s == "eval-j") code = detail::cmd_eval_j(cfg, out);
    else if (s == "eval-j0") code = detail::cmd_eval_j0(cfg, out);
    else if (s == "limits") code = detail::cmd_limits(cfg, out);
    else if (s == "guarantees") code = detail::cmd_guarantees(cfg, out);
    else if (s == "diagram") code = detail::cmd_diagram(cfg, out);
    else if (s == "verify") code = detail::cmd_verify(cfg, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (!cfg.no_timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed: %.3f s\n", dt.count());
    out << buf;
  }
  return code;
}

} // namespace nlsstab::cli
