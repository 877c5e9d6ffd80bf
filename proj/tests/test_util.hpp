// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

// Random fixtures shared by the test binaries.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "conedepth/geometry.hpp"
#include "conedepth/sweep.hpp"

namespace conedepth::testing {

using Rng = std::mt19937_64;

// Integer coordinates in [0, hi] so that ties and duplicates are frequent.
inline DataSet lattice_data(Rng& rng, std::size_t n, int hi = 20) {
  std::uniform_int_distribution<int> coord(0, hi);
  DataSet X;
  for (std::size_t i = 0; i < n; ++i) {
    X.points.push_back({static_cast<double>(coord(rng)), static_cast<double>(coord(rng))});
  }
  return X;
}

inline DataSet uniform_data(Rng& rng, std::size_t n, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> coord(lo, hi);
  DataSet X;
  for (std::size_t i = 0; i < n; ++i) X.points.push_back({coord(rng), coord(rng)});
  return X;
}

// Pointed cone with opening angle in [0.2, pi - 0.2] and generators of
// random length.
inline ConeV random_cone(Rng& rng) {
  std::uniform_real_distribution<double> start(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> width(0.2, std::numbers::pi - 0.2);
  std::uniform_real_distribution<double> length(0.5, 2.0);
  const double a = start(rng);
  const double b = a + width(rng);
  const double la = length(rng);
  const double lb = length(rng);
  return {{la * std::cos(a), la * std::sin(a)}, {lb * std::cos(b), lb * std::sin(b)}};
}

inline DataSet mapped(const DataSet& X, const Mat2& A) {
  DataSet out;
  for (const Point2& x : X.points) out.points.push_back(A * x);
  return out;
}

// The 8-point staircase {(i, 7 - i)}.
inline DataSet staircase() {
  DataSet X;
  for (int i = 0; i < 8; ++i) X.points.push_back({double(i), double(7 - i)});
  return X;
}

// Strictly convex anti-chain {(i, (7 - i)^2)}: every point is a vertex of
// its hull plus the orthant.
inline DataSet convex_antichain() {
  DataSet X;
  for (int i = 0; i < 8; ++i) X.points.push_back({double(i), double((7 - i) * (7 - i))});
  return X;
}

inline DataSet chain() { return {{{0, 0}, {1, 1}, {2, 2}}}; }
inline DataSet two_points() { return {{{0, 2}, {2, 0}}}; }

}  // namespace conedepth::testing

namespace conedepth::testing {

// Vertices of conv(X) + R^2_+, from the lower convex hull: the chain from
// the leftmost point down to the first lowest point.
inline std::vector<Point2> hull_plus_orthant(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Point2> lower;
  for (const Point2& p : pts) {
    while (lower.size() >= 2 &&
           cross(lower.back() - lower[lower.size() - 2], p - lower[lower.size() - 2]) <= 0.0) {
      lower.pop_back();
    }
    if (lower.empty() || !(lower.back() == p)) lower.push_back(p);
  }
  std::size_t last = 0;
  for (std::size_t i = 1; i < lower.size(); ++i) {
    if (lower[i].y < lower[last].y) last = i;
  }
  lower.resize(last + 1);
  return lower;
}

// Same sets of points up to `tol` in each coordinate (greedy matching).
inline bool same_points(std::vector<Point2> a, std::vector<Point2> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Point2& p : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](Point2 q) {
      return std::abs(p.x - q.x) <= tol && std::abs(p.y - q.y) <= tol;
    });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace conedepth::testing
