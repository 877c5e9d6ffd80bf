// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference evaluations. They enumerate every direction at which
// a halfplane count can change instead of sweeping, and share no code with the
// sweep algorithms beyond the basic geometry types. Cubic-ish cost; meant for
// validation on small samples.

#pragma once

#include <cstddef>
#include <vector>

#include "conedepth/geometry.hpp"
#include "conedepth/sweep.hpp"

namespace conedepth {

/// Parameters s in [0, 1] of the dual segment at which the line through z
/// with normal (1 - s) v1 + s v2 passes through some data point: 0, 1 and
/// every interior crossing. Sorted, without duplicates.
std::vector<double> candidate_parameters(Point2 z, const DataSet& X, const DualBase& base);

/// The directions of `candidate_parameters`.
std::vector<Vec2> candidate_directions(Point2 z, const DataSet& X, const DualBase& base);

/// min over the dual segment of #{x in X : w.x <= w.z + eps}, evaluated at
/// every candidate and at the midpoint of every arc between candidates.
std::size_t oracle_min_count(Point2 z, const DataSet& X, const DualBase& base,
                             double eps = Tolerance{}.eps);

/// Cone location depth counted in X plus z (z added unless already present),
/// comparable with DepthResult::K.
std::size_t oracle_cone_depth(Point2 z, const DataSet& X, const ConeV& cone,
                              const Tolerance& tol = {});

/// Whether z lies in the lower cone quantile at level p; z is not added to
/// the sample.
bool oracle_quantile_membership(Point2 z, const DataSet& X, const ConeV& cone, double p,
                                const Tolerance& tol = {});

/// Halfspace depth by an angular sweep around z over the full circle of
/// normals.
std::size_t oracle_tukey_depth(Point2 z, const DataSet& X, double eps = Tolerance{}.eps);

}  // namespace conedepth
