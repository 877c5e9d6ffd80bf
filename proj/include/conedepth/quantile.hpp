// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "conedepth/geometry.hpp"
#include "conedepth/sweep.hpp"

namespace conedepth {

/// Number of data points a level-p quantile must dominate, ceil(N p).
/// Products within 1e-9 (relative) of an integer count as that integer, so
/// e.g. N = 10, p = 0.7 gives 7. Throws OutOfRange unless 0 < p <= 1.
std::size_t level_count(std::size_t n, double p);

/// One halfspace of the lower cone quantile, anchored on a data point lying
/// on its boundary line.
struct QuantileNormal {
  Vec2 w;
  double q = 0.0;
  std::size_t anchor_index = 0;
};

struct QuantileResult {
  double p = 0.0;
  std::size_t K = 0;
  Polyhedron2 poly;
  /// The surviving normals, parallel to `poly.hrep`.
  std::vector<QuantileNormal> normals;
};

/// A direction visited by the quantile sweep.
struct SweepStep {
  Vec2 w;
  /// Rotation parameter of the step taken from this direction; 0 for the
  /// terminal direction.
  double s_bar = 0.0;
  /// Number of data points on or below the boundary line through the anchor.
  std::size_t at_or_below = 0;
  /// False for interior directions whose halfspace dominates exactly K points
  /// (those never contribute to the intersection).
  bool kept = true;
  double q = 0.0;
  std::size_t anchor_index = 0;
};

struct SweepTrace {
  std::vector<SweepStep> steps;

  std::size_t rotations() const { return steps.empty() ? 0 : steps.size() - 1; }
};

/// The w-quantile {z | w.z >= q}, where q is the K-th smallest value of w.x.
Halfspace w_quantile(const DataSet& X, Vec2 w, double p);

/// Rotates from base.v1 to base.v2 keeping the K-th point (1-based) of the
/// current scalarization order on the boundary, and records every visited
/// direction.
SweepTrace quantile_sweep(const DataSet& X, const DualBase& base, std::size_t K,
                          const Tolerance& tol = {});

/// Lower cone quantile at level p: the set of points whose lower cone
/// distribution value is at least p, as a polyhedron with recession cone C.
std::pair<QuantileResult, SweepTrace> cone_quantile(const DataSet& X, const ConeV& cone, double p,
                                                    const Tolerance& tol = {});

}  // namespace conedepth
