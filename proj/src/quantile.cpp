// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include "conedepth/quantile.hpp"

#include <algorithm>
#include <cmath>

#include "conedepth/errors.hpp"

namespace conedepth {

namespace {

using detail::Side;

// Index of the K-th point in the stable ascending order of w.x.
std::size_t kth_in_order(std::span<const Point2> points, Vec2 w, std::size_t K) {
  std::vector<std::pair<double, std::size_t>> keyed;
  keyed.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) keyed.emplace_back(dot(w, points[i]), i);
  std::nth_element(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(K - 1),
                   keyed.end());
  return keyed[K - 1].second;
}

}  // namespace

std::size_t level_count(std::size_t n, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw OutOfRange("quantile level must lie in (0, 1]");
  const double np = static_cast<double>(n) * p;
  const double nearest = std::round(np);
  double k = std::abs(np - nearest) <= 1e-9 * std::max(1.0, np) ? nearest : std::ceil(np);
  k = std::clamp(k, 1.0, static_cast<double>(std::max<std::size_t>(n, 1)));
  return static_cast<std::size_t>(k);
}

Halfspace w_quantile(const DataSet& X, Vec2 w, double p) {
  validate_data(X);
  const std::size_t K = level_count(X.size(), p);
  if (w == Vec2{}) throw InvalidInput("direction must be nonzero");
  const std::size_t anchor = kth_in_order(X.points, w, K);
  return {w, dot(w, X[anchor])};
}

SweepTrace quantile_sweep(const DataSet& X, const DualBase& base, std::size_t K,
                          const Tolerance& tol) {
  validate_data(X);
  const std::size_t n = X.size();
  if (K < 1 || K > n) throw OutOfRange("quantile position outside 1..N");

  // Every visited interior direction has two data points on its boundary, so
  // the number of steps is bounded by the number of pairs.
  const std::size_t max_steps = n * (n - 1) / 2 + 3;

  SweepTrace trace;
  std::vector<Side> sides(n);
  std::vector<std::size_t> below;
  std::vector<std::size_t> block;

  Vec2 w = base.v1;
  bool at_end = false;
  std::size_t pivot = kth_in_order(X.points, w, K);

  auto classify = [&] {
    below.clear();
    block.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const double d = dot(w, X[i] - X[pivot]);
      if (d < -tol.eps) {
        below.push_back(i);
      } else if (d <= tol.eps) {
        block.push_back(i);
      }
    }
  };

  while (true) {
    classify();
    if (below.size() + 1 > K || below.size() + block.size() < K) {
      // Round-off moved the pivot off position K; restart from a fresh order.
      pivot = kth_in_order(X.points, w, K);
      classify();
    }
    const std::size_t k = below.size();

    SweepStep step;
    step.w = w;
    step.at_or_below = k + block.size();
    if (at_end) {
      // Stable order among ties is index order.
      std::sort(block.begin(), block.end());
      step.anchor_index = block[K - k - 1];
      step.q = dot(w, X[step.anchor_index]);
      step.kept = true;
      trace.steps.push_back(step);
      break;
    }

    std::stable_sort(block.begin(), block.end(), [&](std::size_t a, std::size_t b) {
      const double va = dot(base.v2, X[a]);
      const double vb = dot(base.v2, X[b]);
      return va < vb || (va == vb && a < b);
    });
    const std::size_t anchor = block[K - k - 1];
    step.anchor_index = anchor;
    step.q = dot(w, X[anchor]);
    step.kept = trace.steps.empty() || step.at_or_below > K;

    std::fill(sides.begin(), sides.end(), Side::above);
    for (std::size_t i : below) sides[i] = Side::below;
    for (std::size_t j = 0; j + 1 < K - k; ++j) sides[block[j]] = Side::below;
    sides[anchor] = Side::anchor;

    const RotationOutcome rot = detail::solve_rotation(X.points, w, base.v2, anchor, sides, tol);
    step.s_bar = rot.s_bar;
    trace.steps.push_back(step);

    pivot = anchor;
    w = rot.w_next;
    at_end = rot.s_bar >= 1.0;
    if (trace.steps.size() > max_steps) {
      throw InvalidState("quantile sweep did not reach the end of the dual segment");
    }
  }
  return trace;
}

std::pair<QuantileResult, SweepTrace> cone_quantile(const DataSet& X, const ConeV& cone, double p,
                                                    const Tolerance& tol) {
  validate_data(X);
  const std::size_t K = level_count(X.size(), p);
  const DualBase base = dual_base(cone, tol.eps_rank);
  SweepTrace trace = quantile_sweep(X, base, K, tol);

  std::vector<Halfspace> hs;
  std::vector<QuantileNormal> candidates;
  for (const SweepStep& s : trace.steps) {
    if (!s.kept) continue;
    hs.push_back({s.w, s.q});
    candidates.push_back({s.w, s.q, s.anchor_index});
  }

  QuantileResult result;
  result.p = p;
  result.K = K;
  std::vector<std::size_t> survivors;
  result.poly = intersect_halfspaces(hs, {cone.b1, cone.b2}, survivors, tol.eps);
  for (std::size_t i : survivors) result.normals.push_back(candidates[i]);
  return {std::move(result), std::move(trace)};
}

}  // namespace conedepth
