// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "conedepth/geometry.hpp"
#include "conedepth/sweep.hpp"

namespace conedepth {

struct DepthResult {
  /// Cone location depth of z in the sample augmented by z (z is appended
  /// unless it already is a data point).
  std::size_t K = 0;
  /// Lower cone distribution value, in [0, 1].
  double F = 0.0;
  bool z_was_original = false;
  /// A direction of the dual base whose halfspace count equals K.
  Vec2 argmin_w;
  /// Sample size after augmentation.
  std::size_t n_augmented = 0;
};

/// #{x in X : w.x <= w.z + eps}
std::size_t w_depth(Point2 z, const DataSet& X, Vec2 w, double eps = Tolerance{}.eps);

DepthResult cone_depth(Point2 z, const DataSet& X, const ConeV& cone, const Tolerance& tol = {});

/// cone_depth(...).F
double cone_cdf(Point2 z, const DataSet& X, const ConeV& cone, const Tolerance& tol = {});

/// Lower cone distribution values at many query points, evaluated in
/// parallel.
std::vector<double> cone_cdf_grid(std::span<const Point2> zs, const DataSet& X, const ConeV& cone,
                                  const Tolerance& tol = {});

/// The three dual segments whose conic hulls cover every direction:
/// co{(-1,-1),(1,-1)}, co{(1,-1),(0,1)} and co{(-1,-1),(0,1)}.
std::array<DualBase, 3> tukey_segments();

/// Halfspace depth of z: the smallest number of data points in a closed
/// halfplane whose boundary passes through z.
std::size_t tukey_depth(Point2 z, const DataSet& X, const Tolerance& tol = {});

struct TukeyRegion {
  std::size_t K = 0;
  /// Bounded (rec_dirs empty); `poly.empty` marks an empty region.
  Polyhedron2 poly;
  /// Rotation steps over all three segments.
  std::size_t rotations = 0;
};

/// Halfspace depth region {z | tukey_depth(z) >= ceil(N p)}.
TukeyRegion tukey_region(const DataSet& X, double p, const Tolerance& tol = {});

namespace detail {

struct DepthSweep {
  /// Minimal count over the dual segment, z included.
  std::size_t K = 0;
  Vec2 argmin_w;
  std::size_t rotations = 0;
  /// Count reported at each visited direction (last one is the closed count
  /// at v2), for cross-checking against a step-by-step sweep.
  std::vector<std::size_t> visited;
};

/// Sweeps the dual segment keeping z on the boundary. `skip` is the index of
/// z inside `points` when z is itself a data point, or points.size().
DepthSweep depth_sweep(std::span<const Point2> points, Point2 z, std::size_t skip,
                       const DualBase& base, const Tolerance& tol, bool record = false);

}  // namespace detail

}  // namespace conedepth
