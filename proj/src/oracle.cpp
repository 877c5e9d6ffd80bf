// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include "conedepth/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "conedepth/errors.hpp"
#include "conedepth/quantile.hpp"

namespace conedepth {

namespace {

std::size_t count_below(const std::vector<Point2>& pts, Point2 z, Vec2 w, double eps) {
  const double level = dot(w, z) + eps;
  std::size_t n = 0;
  for (const Point2& x : pts) n += dot(w, x) <= level ? 1 : 0;
  return n;
}

std::size_t min_count_over(const std::vector<Point2>& pts, Point2 z, const DualBase& base,
                           const std::vector<double>& params, double eps) {
  auto at = [&](double s) { return (1.0 - s) * base.v1 + s * base.v2; };
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < params.size(); ++i) {
    best = std::min(best, count_below(pts, z, at(params[i]), eps));
    if (i + 1 < params.size()) {
      best = std::min(best, count_below(pts, z, at(0.5 * (params[i] + params[i + 1])), eps));
    }
  }
  return best;
}

}  // namespace

std::vector<double> candidate_parameters(Point2 z, const DataSet& X, const DualBase& base) {
  std::vector<double> params{0.0, 1.0};
  for (const Point2& x : X.points) {
    const Vec2 u = x - z;
    const double a = dot(base.v1, u);
    const double c = dot(base.v2, u);
    if ((a < 0.0 && c > 0.0) || (a > 0.0 && c < 0.0)) params.push_back(a / (a - c));
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  return params;
}

std::vector<Vec2> candidate_directions(Point2 z, const DataSet& X, const DualBase& base) {
  std::vector<Vec2> dirs;
  for (double s : candidate_parameters(z, X, base)) dirs.push_back((1.0 - s) * base.v1 + s * base.v2);
  return dirs;
}

std::size_t oracle_min_count(Point2 z, const DataSet& X, const DualBase& base, double eps) {
  return min_count_over(X.points, z, base, candidate_parameters(z, X, base), eps);
}

std::size_t oracle_cone_depth(Point2 z, const DataSet& X, const ConeV& cone,
                              const Tolerance& tol) {
  validate_data(X);
  const DualBase base = dual_base(cone, tol.eps_rank);
  DataSet augmented = X;
  if (std::find(X.points.begin(), X.points.end(), z) == X.points.end()) {
    augmented.points.push_back(z);
  }
  return oracle_min_count(z, augmented, base, tol.eps);
}

bool oracle_quantile_membership(Point2 z, const DataSet& X, const ConeV& cone, double p,
                                const Tolerance& tol) {
  validate_data(X);
  const std::size_t K = level_count(X.size(), p);
  const DualBase base = dual_base(cone, tol.eps_rank);
  return oracle_min_count(z, X, base, tol.eps) >= K;
}

std::size_t oracle_tukey_depth(Point2 z, const DataSet& X, double eps) {
  validate_data(X);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // Normal angles at which the boundary line through z hits a data point.
  std::vector<double> angles;
  for (const Point2& x : X.points) {
    const Vec2 u = x - z;
    if (u == Vec2{}) continue;
    const double phi = std::atan2(u.y, u.x);
    for (double a : {phi + 0.5 * std::numbers::pi, phi - 0.5 * std::numbers::pi}) {
      angles.push_back(std::fmod(a + 2.0 * two_pi, two_pi));
    }
  }
  if (angles.empty()) return X.size();
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

  std::size_t best = X.size();
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double lo = angles[i];
    const double hi = i + 1 < angles.size() ? angles[i + 1] : angles.front() + two_pi;
    const double mid = 0.5 * (lo + hi);
    best = std::min(best, count_below(X.points, z, {std::cos(mid), std::sin(mid)}, eps));
  }
  return best;
}

}  // namespace conedepth
