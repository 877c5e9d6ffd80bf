// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include "conedepth/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "conedepth/errors.hpp"

namespace conedepth {

void validate_data(const DataSet& X) {
  if (X.empty()) throw EmptyInput("data set is empty");
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (!is_finite(X[i])) {
      throw InvalidInput("data point " + std::to_string(i) + " is not finite");
    }
  }
}

Permutation index_sort(std::span<const double> values) {
  Permutation order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  return order;
}

std::vector<double> scalarize(const DataSet& X, Vec2 w) {
  std::vector<double> out;
  out.reserve(X.size());
  for (const Point2& x : X.points) out.push_back(dot(w, x));
  return out;
}

BoundaryPartition boundary_partition(const DataSet& X, Vec2 w, Point2 anchor, double eps) {
  BoundaryPartition part;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const double d = dot(w, X[i] - anchor);
    if (d < -eps) {
      part.below.push_back(i);
    } else if (d <= eps) {
      part.equal.push_back(i);
    }
  }
  return part;
}

Permutation reorder_ties(Permutation pi, const BoundaryPartition& part, const DataSet& X,
                         Vec2 v2) {
  if (part.L() <= 1) return pi;
  std::vector<bool> in_block(X.size(), false);
  for (std::size_t i : part.equal) in_block[i] = true;

  std::vector<std::size_t> positions;
  std::vector<std::size_t> block;
  for (std::size_t j = 0; j < pi.size(); ++j) {
    if (in_block[pi[j]]) {
      positions.push_back(j);
      block.push_back(pi[j]);
    }
  }
  std::stable_sort(block.begin(), block.end(), [&](std::size_t a, std::size_t b) {
    return dot(v2, X[a]) < dot(v2, X[b]);
  });
  for (std::size_t j = 0; j < positions.size(); ++j) pi[positions[j]] = block[j];
  return pi;
}

RotationOutcome rotation_step(const DataSet& X, Vec2 w, Vec2 v2, const Permutation& pi,
                              std::size_t K, const Tolerance& tol) {
  if (K < 1 || K > X.size() || pi.size() != X.size()) {
    throw OutOfRange("rotation anchor position outside the permutation");
  }
  std::vector<bool> seen(X.size(), false);
  for (std::size_t i : pi) {
    if (i >= X.size() || seen[i]) throw InvalidInput("pi is not a permutation of the data indices");
    seen[i] = true;
  }
  std::vector<detail::Side> sides(X.size(), detail::Side::above);
  for (std::size_t j = 0; j + 1 < K; ++j) sides[pi[j]] = detail::Side::below;
  sides[pi[K - 1]] = detail::Side::anchor;
  return detail::solve_rotation(X.points, w, v2, pi[K - 1], sides, tol);
}

namespace detail {

RotationOutcome solve_rotation(std::span<const Point2> points, Vec2 w, Vec2 v2,
                               std::size_t anchor, std::span<const Side> sides,
                               const Tolerance& tol) {
  const Point2 pivot = points[anchor];
  double s_bar = 1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (sides[i] == Side::anchor) continue;
    const Vec2 u = points[i] - pivot;
    const double a = dot(w, u);
    const double c = dot(v2, u);
    if (std::abs(a) <= tol.eps && std::abs(c) <= tol.eps) continue;  // coincides with the pivot

    // Constraint value along the rotation is a + s (c - a); orient it so that
    // feasibility reads alpha + s (gamma - alpha) >= 0.
    const double sign = sides[i] == Side::above ? 1.0 : -1.0;
    const double alpha = sign * a;
    const double gamma = sign * c;
    if (std::abs(alpha) <= tol.eps) {
      if (gamma < -tol.eps) {
        throw InvalidState("tied point would cross the boundary immediately; ties not reordered");
      }
      continue;
    }
    if (alpha < 0.0) {
      throw InvalidState("permutation is not sorted along the current direction");
    }
    if (gamma >= 0.0) continue;
    const double critical = alpha / (alpha - gamma);
    if (critical > tol.eps_s) s_bar = std::min(s_bar, critical);
  }
  RotationOutcome out;
  out.s_bar = s_bar;
  out.w_next = s_bar >= 1.0 ? v2 : (1.0 - s_bar) * w + s_bar * v2;
  return out;
}

}  // namespace detail

}  // namespace conedepth
