#pragma once

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "boundary.hpp"
#include "stability.hpp"

namespace nlsstab {

struct AxisRange {
  double lo = 0;
  double hi = 1;
};

// Cell values: finite J, NaN where no standing wave exists, ±∞ where J diverges.
struct DiagramGrid {
  std::vector<double> omega_axis;
  std::vector<double> gamma_axis;
  std::vector<double> values; // row-major, one row per γ
  std::optional<NonlinearityParams> params;

  std::size_t nx() const { return omega_axis.size(); }
  std::size_t ny() const { return gamma_axis.size(); }
  double at(std::size_t row, std::size_t col) const { return values[row * nx() + col]; }
  double& at(std::size_t row, std::size_t col) { return values[row * nx() + col]; }
};

inline bool is_nonexistent(double v) { return std::isnan(v); }
inline bool is_divergent(double v) { return std::isinf(v); }

inline std::vector<double> linear_axis(AxisRange r, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = i + 1 == n ? r.hi : r.lo + (r.hi - r.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// Fills a grid with f(ω,γ), spreading rows over `jobs` threads.
inline DiagramGrid sweep_function(AxisRange omega_range, AxisRange gamma_range, std::size_t nx, std::size_t ny,
                                  const std::function<double(double, double)>& f, unsigned jobs = 0) {
  if (nx < 2 || ny < 2) throw std::domain_error("sweep: need at least 2 points per axis");
  if (!(omega_range.lo < omega_range.hi) || !(gamma_range.lo < gamma_range.hi) ||
      !std::isfinite(omega_range.hi - omega_range.lo) || !std::isfinite(gamma_range.hi - gamma_range.lo))
    throw std::domain_error("sweep: ranges must be finite and increasing");
  DiagramGrid grid;
  grid.omega_axis = linear_axis(omega_range, nx);
  grid.gamma_axis = linear_axis(gamma_range, ny);
  grid.values.assign(nx * ny, 0.0);
  if (jobs == 0) jobs = default_jobs();
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(ny));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t row; (row = next.fetch_add(1)) < ny;)
      for (std::size_t col = 0; col < nx; ++col) grid.at(row, col) = f(grid.omega_axis[col], grid.gamma_axis[row]);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return grid;
}

// J at one query point in grid-cell form.
inline double cell_value(const NonlinearityParams& np, double omega, double gamma) {
  try {
    const auto v = eval_J(np, omega, gamma);
    return v.j;
  } catch (const not_found_error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

inline DiagramGrid sweep_grid(const NonlinearityParams& np, AxisRange omega_range, AxisRange gamma_range,
                              std::size_t nx, std::size_t ny, unsigned jobs = 0) {
  np.validate();
  if (!(omega_range.lo > 0)) throw std::domain_error("sweep_grid: omega range must be positive");
  auto grid = sweep_function(
      omega_range, gamma_range, nx, ny, [&np](double w, double g) { return cell_value(np, w, g); }, jobs);
  grid.params = np;
  return grid;
}

struct ContourPoint {
  double omega = 0;
  double gamma = 0;
};

using Polyline = std::vector<ContourPoint>;

struct ContourSet {
  double level = 0;
  std::vector<Polyline> paths;
};

namespace detail {

struct EdgeSegment {
  long long e0, e1;
};

// In the FF case J jumps from +∞ to −∞ across the nonexistence curve, which would otherwise
// show up as a phantom level line. Marks each node as lying right of ω*(γ) or not.
inline std::vector<char> upper_right_side(const DiagramGrid& grid) {
  std::vector<char> side(grid.values.size(), 0);
  if (!grid.params || grid.params->label() != CaseLabel::FF) return side;
  for (std::size_t i = 0; i < grid.ny(); ++i) {
    const auto w = omega_star(*grid.params, grid.gamma_axis[i]);
    if (!w) continue;
    for (std::size_t j = 0; j < grid.nx(); ++j) side[i * grid.nx() + j] = grid.omega_axis[j] > *w;
  }
  return side;
}

} // namespace detail

// Marching squares over cells whose four corners are finite and on the same side of the
// nonexistence curve. Saddle cells are resolved by the value at the cell centre: J itself
// when the grid carries parameters, else the corner mean.
inline std::vector<ContourSet> extract_contours(const DiagramGrid& grid, const std::vector<double>& levels) {
  const std::size_t nx = grid.nx(), ny = grid.ny();
  std::vector<ContourSet> out;
  if (nx < 2 || ny < 2) {
    for (double c : levels) out.push_back({c, {}});
    return out;
  }
  const auto side = detail::upper_right_side(grid);
  auto straddles = [&](std::size_t i, std::size_t j) {
    const char s = side[i * nx + j];
    return side[i * nx + j + 1] != s || side[(i + 1) * nx + j] != s || side[(i + 1) * nx + j + 1] != s;
  };
  // Edge ids: horizontal edge (row i, cols j..j+1) → 2(i·nx + j); vertical (col j, rows i..i+1) → 2(i·nx + j) + 1.
  auto h_id = [&](std::size_t i, std::size_t j) { return 2 * static_cast<long long>(i * nx + j); };
  auto v_id = [&](std::size_t i, std::size_t j) { return 2 * static_cast<long long>(i * nx + j) + 1; };

  for (double level : levels) {
    std::map<long long, ContourPoint> edge_point;
    std::vector<detail::EdgeSegment> segments;

    auto crossing = [&](double wa, double ga, double va, double wb, double gb, double vb) {
      const double t = (level - va) / (vb - va);
      return ContourPoint{wa + t * (wb - wa), ga + t * (gb - ga)};
    };

    for (std::size_t i = 0; i + 1 < ny; ++i) {
      for (std::size_t j = 0; j + 1 < nx; ++j) {
        // Corners counter-clockwise from bottom-left.
        const double v[4] = {grid.at(i, j), grid.at(i, j + 1), grid.at(i + 1, j + 1), grid.at(i + 1, j)};
        if (!(std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]) && std::isfinite(v[3]))) continue;
        if (straddles(i, j)) continue;
        const double w0 = grid.omega_axis[j], w1 = grid.omega_axis[j + 1];
        const double g0 = grid.gamma_axis[i], g1 = grid.gamma_axis[i + 1];
        const bool in[4] = {v[0] >= level, v[1] >= level, v[2] >= level, v[3] >= level};

        // Edges: 0 bottom (c0→c1), 1 right (c1→c2), 2 top (c3→c2), 3 left (c0→c3).
        const long long ids[4] = {h_id(i, j), v_id(i, j + 1), h_id(i + 1, j), v_id(i, j)};
        bool cut[4] = {in[0] != in[1], in[1] != in[2], in[3] != in[2], in[0] != in[3]};
        auto point_on = [&](int e) {
          switch (e) {
          case 0: return crossing(w0, g0, v[0], w1, g0, v[1]);
          case 1: return crossing(w1, g0, v[1], w1, g1, v[2]);
          case 2: return crossing(w0, g1, v[3], w1, g1, v[2]);
          default: return crossing(w0, g0, v[0], w0, g1, v[3]);
          }
        };
        int count = 0;
        for (int e = 0; e < 4; ++e)
          if (cut[e]) {
            ++count;
            edge_point.try_emplace(ids[e], point_on(e));
          }
        if (count == 2) {
          int a = -1, b = -1;
          for (int e = 0; e < 4; ++e)
            if (cut[e]) (a < 0 ? a : b) = e;
          segments.push_back({ids[a], ids[b]});
        } else if (count == 4) {
          double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
          if (grid.params) {
            const double c = cell_value(*grid.params, 0.5 * (w0 + w1), 0.5 * (g0 + g1));
            if (std::isfinite(c)) centre = c;
          }
          if ((centre >= level) == in[0]) {
            // c0 and c2 joined through the centre; cut off c1 and c3.
            segments.push_back({ids[0], ids[1]});
            segments.push_back({ids[2], ids[3]});
          } else {
            segments.push_back({ids[3], ids[0]});
            segments.push_back({ids[1], ids[2]});
          }
        }
      }
    }

    // Chain segments through shared edges: open chains first, then closed loops.
    std::map<long long, std::vector<std::size_t>> by_edge;
    for (std::size_t k = 0; k < segments.size(); ++k) {
      by_edge[segments[k].e0].push_back(k);
      by_edge[segments[k].e1].push_back(k);
    }
    std::vector<bool> used(segments.size(), false);
    ContourSet set{level, {}};
    auto walk = [&](std::size_t start, long long from_edge) {
      Polyline path{edge_point.at(from_edge)};
      long long edge = from_edge;
      std::size_t seg = start;
      while (true) {
        used[seg] = true;
        const long long other = segments[seg].e0 == edge ? segments[seg].e1 : segments[seg].e0;
        path.push_back(edge_point.at(other));
        edge = other;
        std::optional<std::size_t> next;
        for (std::size_t k : by_edge[edge])
          if (!used[k]) next = k;
        if (!next) break;
        seg = *next;
      }
      set.paths.push_back(std::move(path));
    };
    for (const auto& [edge, segs] : by_edge)
      if (segs.size() == 1 && !used[segs[0]]) walk(segs[0], edge);
    for (std::size_t k = 0; k < segments.size(); ++k)
      if (!used[k]) walk(k, segments[k].e0);
    out.push_back(std::move(set));
  }
  return out;
}

namespace detail {

inline std::string format_value(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "+Inf" : "-Inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_value(const std::string& s) {
  if (s == "NaN") return std::numeric_limits<double>::quiet_NaN();
  if (s == "+Inf") return std::numeric_limits<double>::infinity();
  if (s == "-Inf") return -std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw std::runtime_error("malformed number '" + s + "'");
  return v;
}

inline std::ofstream open_for_write(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path + ": " + std::strerror(errno));
  return f;
}

inline void finish_write(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw std::runtime_error("write to " + path + " failed: " + std::strerror(errno));
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string field; std::getline(ss, field, ',');) out.push_back(field);
  return out;
}

} // namespace detail

inline void write_grid_csv(const DiagramGrid& grid, std::ostream& os) {
  os << "gamma\\omega";
  for (double w : grid.omega_axis) os << ',' << detail::format_value(w);
  os << '\n';
  for (std::size_t i = 0; i < grid.ny(); ++i) {
    os << detail::format_value(grid.gamma_axis[i]);
    for (std::size_t j = 0; j < grid.nx(); ++j) os << ',' << detail::format_value(grid.at(i, j));
    os << '\n';
  }
}

inline void export_grid_csv(const DiagramGrid& grid, const std::string& path) {
  auto f = detail::open_for_write(path);
  write_grid_csv(grid, f);
  detail::finish_write(f, path);
}

inline DiagramGrid read_grid_csv(std::istream& is) {
  DiagramGrid grid;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("grid csv: missing header");
  auto head = detail::split_csv(line);
  if (head.empty() || head[0] != "gamma\\omega") throw std::runtime_error("grid csv: unexpected header");
  for (std::size_t k = 1; k < head.size(); ++k) grid.omega_axis.push_back(detail::parse_value(head[k]));
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto fields = detail::split_csv(line);
    if (fields.size() != head.size()) throw std::runtime_error("grid csv: ragged row");
    grid.gamma_axis.push_back(detail::parse_value(fields[0]));
    for (std::size_t k = 1; k < fields.size(); ++k) grid.values.push_back(detail::parse_value(fields[k]));
  }
  return grid;
}

inline DiagramGrid import_grid_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path + ": " + std::strerror(errno));
  return read_grid_csv(f);
}

inline nlohmann::json params_json(const NonlinearityParams& np) {
  return {{"p", np.p},         {"q", np.q},         {"r", np.r},
          {"sign1", np.sign1}, {"sign3", np.sign3}, {"case", std::string(to_string(np.label()))}};
}

// One object per level: {"params":{...},"level":c,"paths":[[[ω,γ],...],...]}.
inline nlohmann::json contours_json(const std::vector<ContourSet>& contours,
                                    const std::optional<NonlinearityParams>& np) {
  auto out = nlohmann::json::array();
  for (const auto& set : contours) {
    nlohmann::json item;
    item["params"] = np ? params_json(*np) : nlohmann::json::object();
    item["level"] = set.level;
    auto paths = nlohmann::json::array();
    for (const auto& path : set.paths) {
      auto pts = nlohmann::json::array();
      for (const auto& pt : path) pts.push_back({pt.omega, pt.gamma});
      paths.push_back(std::move(pts));
    }
    item["paths"] = std::move(paths);
    out.push_back(std::move(item));
  }
  return out;
}

inline void export_contours_json(const std::vector<ContourSet>& contours, const std::optional<NonlinearityParams>& np,
                                 const std::string& path) {
  auto f = detail::open_for_write(path);
  f << contours_json(contours, np).dump(1) << '\n';
  detail::finish_write(f, path);
}

inline void write_curve_csv(const BoundaryCurve& curve, std::ostream& os) {
  os << "a,omega_ne,gamma_ne\n";
  for (const auto& s : curve.samples)
    os << detail::format_value(s.a) << ',' << detail::format_value(s.omega_ne) << ','
       << detail::format_value(s.gamma_ne) << '\n';
}

inline void export_curve_csv(const BoundaryCurve& curve, const std::string& path) {
  auto f = detail::open_for_write(path);
  write_curve_csv(curve, f);
  detail::finish_write(f, path);
}

} // namespace nlsstab
