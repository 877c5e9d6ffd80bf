// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conedepth/geometry.hpp"

namespace conedepth {

/// Indexed bivariate sample. Indices are 0-based positions in `points`;
/// insertion order is the tie-breaking order of every sort.
struct DataSet {
  std::vector<Point2> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const Point2& operator[](std::size_t i) const { return points[i]; }
};

/// Throws EmptyInput for an empty sample and InvalidInput for non-finite
/// coordinates.
void validate_data(const DataSet& X);

/// Source indices in sorted order; position j holds the index of the
/// (j+1)-th smallest value.
using Permutation = std::vector<std::size_t>;

/// Stable ascending index sort.
Permutation index_sort(std::span<const double> values);

/// w.x for every data point, in index order.
std::vector<double> scalarize(const DataSet& X, Vec2 w);

/// Data points strictly below / on the line {z | w.z = w.anchor}.
struct BoundaryPartition {
  std::vector<std::size_t> below;
  std::vector<std::size_t> equal;

  std::size_t k() const { return below.size(); }
  std::size_t L() const { return equal.size(); }
};

BoundaryPartition boundary_partition(const DataSet& X, Vec2 w, Point2 anchor,
                                     double eps = Tolerance{}.eps);

/// Re-sorts the tie block `part.equal` inside `pi` ascending by v2.x, leaving
/// every other position untouched.
Permutation reorder_ties(Permutation pi, const BoundaryPartition& part, const DataSet& X, Vec2 v2);

struct RotationOutcome {
  double s_bar = 1.0;
  Vec2 w_next;
};

/// Turns w towards v2 around the K-th point of `pi` (K is 1-based) for as
/// long as the points before it stay on or below and the points after it
/// stay on or above the rotating boundary line.
RotationOutcome rotation_step(const DataSet& X, Vec2 w, Vec2 v2, const Permutation& pi,
                              std::size_t K, const Tolerance& tol = {});

namespace detail {

/// Which side of the rotating line a point must stay on.
enum class Side : signed char { below = -1, anchor = 0, above = 1 };

/// Rotation step with the constraint side of every data point given
/// explicitly; `rotation_step` derives the sides from a permutation.
RotationOutcome solve_rotation(std::span<const Point2> points, Vec2 w, Vec2 v2,
                               std::size_t anchor, std::span<const Side> sides,
                               const Tolerance& tol);

}  // namespace detail

}  // namespace conedepth
