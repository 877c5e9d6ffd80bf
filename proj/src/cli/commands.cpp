// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "conedepth/cli.hpp"
#include "conedepth/errors.hpp"

namespace conedepth::cli {

namespace {

// Adding 0.0 turns -0.0 into 0.0.
nlohmann::json vec_json(Vec2 v) { return nlohmann::json::array({v.x + 0.0, v.y + 0.0}); }

std::vector<double> sorted_levels(const RunConfig& cfg) {
  if (cfg.p_levels.empty()) throw std::invalid_argument("at least one -p level is required");
  std::vector<double> levels = cfg.p_levels;
  std::sort(levels.begin(), levels.end());
  for (double p : levels) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("-p levels must lie in (0, 1]");
  }
  return levels;
}

Point2 require_z(const RunConfig& cfg) {
  if (!cfg.z) throw std::invalid_argument("-z x,y is required");
  return *cfg.z;
}

nlohmann::json one_or_many(nlohmann::json items) {
  return items.size() == 1 ? nlohmann::json(items[0]) : items;
}

struct Box {
  double xmin, xmax, ymin, ymax;
};

Box padded_bounds(const DataSet& X) {
  Box b{X[0].x, X[0].x, X[0].y, X[0].y};
  for (const Point2& x : X.points) {
    b.xmin = std::min(b.xmin, x.x);
    b.xmax = std::max(b.xmax, x.x);
    b.ymin = std::min(b.ymin, x.y);
    b.ymax = std::max(b.ymax, x.y);
  }
  const double dx = b.xmax > b.xmin ? 0.1 * (b.xmax - b.xmin) : 1.0;
  const double dy = b.ymax > b.ymin ? 0.1 * (b.ymax - b.ymin) : 1.0;
  return {b.xmin - dx, b.xmax + dx, b.ymin - dy, b.ymax + dy};
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Boundary of a cone quantile in chain order, closed off by long rays along
// the two cone generators.
std::vector<Point2> boundary_path(const Polyhedron2& poly, double reach) {
  std::vector<Point2> chain;
  for (std::size_t i = 0; i + 1 < poly.hrep.size(); ++i) {
    const Halfspace& a = poly.hrep[i];
    const Halfspace& b = poly.hrep[i + 1];
    const double det = cross(a.w, b.w);
    chain.push_back({(a.q * b.w.y - b.q * a.w.y) / det, (a.w.x * b.q - b.w.x * a.q) / det});
  }
  if (chain.empty() || poly.rec_dirs.size() != 2) return chain;
  const Vec2 b1 = poly.rec_dirs[0];
  const Vec2 b2 = poly.rec_dirs[1];
  std::vector<Point2> path;
  path.push_back(chain.front() + (reach / norm(b1)) * b1);
  path.insert(path.end(), chain.begin(), chain.end());
  path.push_back(chain.back() + (reach / norm(b2)) * b2);
  return path;
}

}  // namespace

nlohmann::json polyhedron_json(const Polyhedron2& poly) {
  nlohmann::json hrep = nlohmann::json::array();
  for (const Halfspace& h : poly.hrep) hrep.push_back({{"w", vec_json(h.w)}, {"q", h.q + 0.0}});
  nlohmann::json vertices = nlohmann::json::array();
  for (const Point2& v : poly.vertices) vertices.push_back(vec_json(v));
  nlohmann::json directions = nlohmann::json::array();
  for (const Vec2& d : poly.rec_dirs) directions.push_back(vec_json(d));
  return {{"hrep", hrep}, {"vrep", {{"vertices", vertices}, {"directions", directions}}}};
}

nlohmann::json quantile_json(const QuantileResult& result, std::size_t steps) {
  nlohmann::json j = polyhedron_json(result.poly);
  j["p"] = result.p;
  j["K"] = result.K;
  j["steps"] = steps;
  return j;
}

nlohmann::json cmd_quantile(const RunConfig& cfg, const DataSet& X) {
  nlohmann::json out = nlohmann::json::array();
  for (double p : sorted_levels(cfg)) {
    const auto [result, trace] = cone_quantile(X, cfg.cone, p, cfg.tol);
    out.push_back(quantile_json(result, trace.rotations()));
  }
  return one_or_many(std::move(out));
}

nlohmann::json cmd_cdf(const RunConfig& cfg, const DataSet& X) {
  const DepthResult r = cone_depth(require_z(cfg), X, cfg.cone, cfg.tol);
  return {{"K", r.K}, {"F", r.F}, {"argmin_w", vec_json(r.argmin_w)}};
}

nlohmann::json cmd_depth(const RunConfig& cfg, const DataSet& X) {
  return {{"K", cone_depth(require_z(cfg), X, cfg.cone, cfg.tol).K}};
}

nlohmann::json cmd_tukey_depth(const RunConfig& cfg, const DataSet& X) {
  return {{"depth", tukey_depth(require_z(cfg), X, cfg.tol)}};
}

nlohmann::json cmd_tukey_region(const RunConfig& cfg, const DataSet& X) {
  nlohmann::json out = nlohmann::json::array();
  for (double p : sorted_levels(cfg)) {
    const TukeyRegion region = tukey_region(X, p, cfg.tol);
    nlohmann::json j = polyhedron_json(region.poly);
    j["p"] = p;
    j["K"] = region.K;
    j["steps"] = region.rotations;
    j["empty"] = region.poly.empty;
    out.push_back(std::move(j));
  }
  return one_or_many(std::move(out));
}

std::vector<GridRow> cmd_grid(const RunConfig& cfg, const DataSet& X) {
  if (cfg.nx < 1 || cfg.ny < 1) throw std::invalid_argument("--nx and --ny must be positive");
  Box box;
  if (cfg.bounds) {
    const auto& b = *cfg.bounds;
    box = {b[0], b[1], b[2], b[3]};
  } else {
    box = padded_bounds(X);
  }
  auto coord = [](double lo, double hi, std::size_t i, std::size_t n) {
    return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  std::vector<Point2> zs;
  zs.reserve(cfg.nx * cfg.ny);
  for (std::size_t iy = 0; iy < cfg.ny; ++iy) {
    for (std::size_t ix = 0; ix < cfg.nx; ++ix) {
      zs.push_back({coord(box.xmin, box.xmax, ix, cfg.nx), coord(box.ymin, box.ymax, iy, cfg.ny)});
    }
  }
  const std::vector<double> F = cone_cdf_grid(zs, X, cfg.cone, cfg.tol);
  std::vector<GridRow> rows;
  rows.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) rows.push_back({zs[i].x, zs[i].y, F[i]});
  return rows;
}

std::string cmd_plot(const RunConfig& cfg, const DataSet& X) {
  constexpr double size = 600.0;
  const Box box = padded_bounds(X);
  auto px = [&](double x) { return (x - box.xmin) / (box.xmax - box.xmin) * size; };
  auto py = [&](double y) { return size - (y - box.ymin) / (box.ymax - box.ymin) * size; };
  const double reach = 4.0 * std::hypot(box.xmax - box.xmin, box.ymax - box.ymin);
  static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                            "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\""
      << " viewBox=\"0 0 600 600\">\n"
      << "<defs><clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"600\" height=\"600\"/>"
      << "</clipPath></defs>\n"
      << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\" stroke=\"black\"/>\n";

  std::vector<double> levels = cfg.p_levels;
  std::sort(levels.begin(), levels.end());
  svg << "<g clip-path=\"url(#frame)\" fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto [result, trace] = cone_quantile(X, cfg.cone, levels[i], cfg.tol);
    svg << "<polyline class=\"quantile\" data-p=\"" << format_number(levels[i]) << "\" stroke=\""
        << palette[i % std::size(palette)] << "\" points=\"";
    bool first = true;
    for (const Point2& v : boundary_path(result.poly, reach)) {
      svg << (first ? "" : " ") << fixed(px(v.x)) << ',' << fixed(py(v.y));
      first = false;
    }
    svg << "\"/>\n";
  }
  svg << "</g>\n";

  const bool labels = X.size() <= 50;
  for (const Point2& x : X.points) {
    svg << "<circle cx=\"" << fixed(px(x.x)) << "\" cy=\"" << fixed(py(x.y))
        << "\" r=\"3\" fill=\"black\"/>\n";
    if (labels) {
      svg << "<text x=\"" << fixed(px(x.x) + 4.0) << "\" y=\"" << fixed(py(x.y) - 4.0)
          << "\" font-size=\"10\" font-family=\"sans-serif\">"
          << cone_depth(x, X, cfg.cone, cfg.tol).K << "</text>\n";
    }
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    svg << "<text x=\"8\" y=\"" << fixed(16.0 + 14.0 * static_cast<double>(i))
        << "\" font-size=\"12\" font-family=\"sans-serif\" fill=\""
        << palette[i % std::size(palette)] << "\">p = " << format_number(levels[i])
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace conedepth::cli
