// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include "conedepth/depth.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#if __has_include(<execution>) && defined(CONEDEPTH_PARALLEL)
#include <execution>
#define CONEDEPTH_PAR_POLICY std::execution::par,
#else
#define CONEDEPTH_PAR_POLICY
#endif

#include "conedepth/errors.hpp"
#include "conedepth/quantile.hpp"

namespace conedepth {

namespace {

// Index of the last copy of z in X, or X.size() when z is not a data point.
std::size_t last_occurrence(const DataSet& X, Point2 z) {
  for (std::size_t i = X.size(); i-- > 0;) {
    if (X[i] == z) return i;
  }
  return X.size();
}

}  // namespace

std::size_t w_depth(Point2 z, const DataSet& X, Vec2 w, double eps) {
  const double level = dot(w, z) + eps;
  return static_cast<std::size_t>(std::count_if(
      X.points.begin(), X.points.end(), [&](const Point2& x) { return dot(w, x) <= level; }));
}

namespace detail {

DepthSweep depth_sweep(std::span<const Point2> points, Point2 z, std::size_t skip,
                       const DualBase& base, const Tolerance& tol, bool record) {
  // z stays the pivot of every rotation step, so the direction at which each
  // data point crosses the rotating line is fixed up front: with
  // a = v1.(x - z) and c = v2.(x - z) the sign along the segment is that of
  // (1 - t) a + t c. The rotation steps visit these crossings in order.
  struct Crossing {
    double t;
    std::uint32_t index;
    std::int32_t delta;
  };
  std::vector<Crossing> crossings;
  crossings.reserve(points.size());
  std::size_t count = 1;     // open arc just after v1, z included
  std::size_t count_v2 = 1;  // closed halfplane at v2
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i == skip) continue;
    const Vec2 u = points[i] - z;
    const double a = dot(base.v1, u);
    const double c = dot(base.v2, u);
    if (c <= tol.eps) ++count_v2;
    if (std::abs(a) <= tol.eps) {
      // On the boundary at v1: the v2 order puts it before z when c < 0;
      // copies of z are always counted.
      if (c < 0.0 || std::abs(c) <= tol.eps) ++count;
      continue;
    }
    if (a < 0.0) {
      ++count;
      if (c > tol.eps) crossings.push_back({a / (a - c), static_cast<std::uint32_t>(i), -1});
    } else if (c < -tol.eps) {
      crossings.push_back({a / (a - c), static_cast<std::uint32_t>(i), +1});
    }
  }
  std::sort(crossings.begin(), crossings.end(), [](const Crossing& l, const Crossing& r) {
    return l.t < r.t || (l.t == r.t && l.index < r.index);
  });

  auto direction = [&](double t) { return (1.0 - t) * base.v1 + t * base.v2; };

  DepthSweep out;
  double t = 0.0;
  std::size_t next = 0;
  out.K = std::numeric_limits<std::size_t>::max();
  auto visit = [&](std::size_t k, Vec2 witness) {
    if (record) out.visited.push_back(k);
    if (k < out.K) {
      out.K = k;
      out.argmin_w = witness;
    }
  };

  while (true) {
    // Count on the open arc (t, t_next) is attained at its midpoint.
    const double t_next = next < crossings.size() ? crossings[next].t : 1.0;
    visit(count, direction(0.5 * (t + t_next)));
    ++out.rotations;
    if (next == crossings.size()) break;

    // Next rotation step: every point on the boundary of the new direction
    // changes side together.
    t = crossings[next].t;
    const Vec2 w = direction(t);
    do {
      count = static_cast<std::size_t>(static_cast<long long>(count) + crossings[next].delta);
      ++next;
    } while (next < crossings.size() &&
             std::abs(dot(w, points[crossings[next].index] - z)) <= tol.eps);
  }
  visit(count_v2, base.v2);
  return out;
}

}  // namespace detail

namespace {

// cone_depth for an already validated sample and cone.
DepthResult depth_in(Point2 z, const DataSet& X, const DualBase& base, const Tolerance& tol) {
  if (!is_finite(z)) throw InvalidInput("query point is not finite");
  const std::size_t iz = last_occurrence(X, z);
  DepthResult result;
  result.z_was_original = iz < X.size();
  result.n_augmented = X.size() + (result.z_was_original ? 0 : 1);

  const detail::DepthSweep sweep = detail::depth_sweep(X.points, z, iz, base, tol);
  result.K = sweep.K;
  result.argmin_w = sweep.argmin_w;
  const double n = static_cast<double>(result.n_augmented);
  const double k = static_cast<double>(result.K);
  result.F = result.z_was_original ? k / n : (k - 1.0) / (n - 1.0);
  return result;
}

}  // namespace

DepthResult cone_depth(Point2 z, const DataSet& X, const ConeV& cone, const Tolerance& tol) {
  validate_data(X);
  return depth_in(z, X, dual_base(cone, tol.eps_rank), tol);
}

double cone_cdf(Point2 z, const DataSet& X, const ConeV& cone, const Tolerance& tol) {
  return cone_depth(z, X, cone, tol).F;
}

std::vector<double> cone_cdf_grid(std::span<const Point2> zs, const DataSet& X, const ConeV& cone,
                                  const Tolerance& tol) {
  validate_data(X);
  const DualBase base = dual_base(cone, tol.eps_rank);
  std::vector<double> out(zs.size());
  std::transform(CONEDEPTH_PAR_POLICY zs.begin(), zs.end(), out.begin(),
                 [&](const Point2& z) { return depth_in(z, X, base, tol).F; });
  return out;
}

std::array<DualBase, 3> tukey_segments() {
  return {DualBase{{-1.0, -1.0}, {1.0, -1.0}}, DualBase{{1.0, -1.0}, {0.0, 1.0}},
          DualBase{{-1.0, -1.0}, {0.0, 1.0}}};
}

std::size_t tukey_depth(Point2 z, const DataSet& X, const Tolerance& tol) {
  validate_data(X);
  if (!is_finite(z)) throw InvalidInput("query point is not finite");
  const std::size_t iz = last_occurrence(X, z);
  std::size_t K = std::numeric_limits<std::size_t>::max();
  for (const DualBase& segment : tukey_segments()) {
    K = std::min(K, detail::depth_sweep(X.points, z, iz, segment, tol).K);
  }
  // The sweep counts z itself; a fresh query point is not a data point.
  return iz < X.size() ? K : K - 1;
}

TukeyRegion tukey_region(const DataSet& X, double p, const Tolerance& tol) {
  validate_data(X);
  TukeyRegion region;
  region.K = level_count(X.size(), p);

  std::vector<Halfspace> pooled;
  for (const DualBase& segment : tukey_segments()) {
    const SweepTrace trace = quantile_sweep(X, segment, region.K, tol);
    region.rotations += trace.rotations();
    for (const SweepStep& s : trace.steps) {
      if (s.kept) pooled.push_back({s.w, s.q});
    }
  }

  // Depth regions lie inside the convex hull, hence inside the bounding box.
  Point2 lo = X[0];
  Point2 hi = X[0];
  for (const Point2& x : X.points) {
    lo = {std::min(lo.x, x.x), std::min(lo.y, x.y)};
    hi = {std::max(hi.x, x.x), std::max(hi.y, x.y)};
  }
  const double margin = 1.0 + 0.1 * std::max(hi.x - lo.x, hi.y - lo.y);
  lo = lo - Vec2{margin, margin};
  hi = hi + Vec2{margin, margin};
  region.poly = intersect_halfspaces_in_box(pooled, lo, hi, tol.eps);
  return region;
}

}  // namespace conedepth
