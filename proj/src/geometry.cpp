// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include "conedepth/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "conedepth/errors.hpp"

namespace conedepth {

namespace {

bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Intersection point of the boundary lines of two non-parallel halfspaces.
Point2 boundary_meet(const Halfspace& a, const Halfspace& b) {
  const double det = cross(a.w, b.w);
  return {(a.q * b.w.y - b.q * a.w.y) / det, (a.w.x * b.q - b.w.x * a.q) / det};
}

}  // namespace

void validate_cone(const ConeV& cone, double eps_rank) {
  if (!is_finite(cone.b1) || !is_finite(cone.b2)) {
    throw DegenerateCone("cone generators must be finite");
  }
  if (cone.b1 == Vec2{} || cone.b2 == Vec2{}) {
    throw UnsupportedCone("cone with a zero generator is a ray or a point");
  }
  if (std::abs(cross(cone.b1, cone.b2)) <= eps_rank) {
    if (dot(cone.b1, cone.b2) < 0.0) {
      throw UnsupportedCone("opposite generators span a line");
    }
    throw DegenerateCone("cone generators are linearly dependent");
  }
}

bool cone_contains(const ConeV& cone, Vec2 d, double eps) {
  const double det = cross(cone.b1, cone.b2);
  const double s1 = cross(d, cone.b2) / det;
  const double s2 = cross(cone.b1, d) / det;
  return s1 >= -eps && s2 >= -eps;
}

DualBase dual_base(const ConeV& cone, double eps_rank) {
  validate_cone(cone, eps_rank);
  DualBase base{{cone.b1.y, -cone.b1.x}, {-cone.b2.y, cone.b2.x}};
  if (dot(base.v1, cone.b2) < 0.0 || dot(base.v2, cone.b1) < 0.0) {
    base.v1 = -base.v1;
    base.v2 = -base.v2;
  }
  return base;
}

Vec2 weight_at(const DualBase& base, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw OutOfRange("segment parameter must lie in [0, 1]");
  }
  if (s == 0.0) return base.v1;
  if (s == 1.0) return base.v2;
  return (1.0 - s) * base.v1 + s * base.v2;
}

bool contains(const Polyhedron2& poly, Point2 z, double eps) {
  if (poly.empty) return false;
  return std::all_of(poly.hrep.begin(), poly.hrep.end(),
                     [&](const Halfspace& h) { return h.contains(z, eps); });
}

AffineMap standardizer(const ConeV& cone, double eps_rank) {
  validate_cone(cone, eps_rank);
  const auto [b1, b2] = cone;
  const double det = cross(b1, b2);
  AffineMap map;
  map.A_inv = {b1.x, b2.x, b1.y, b2.y};
  map.A = {b2.y / det, -b2.x / det, -b1.y / det, b1.x / det};
  return map;
}

Polyhedron2 intersect_halfspaces(std::span<const Halfspace> hs, std::array<Vec2, 2> rec_dirs,
                                 double eps) {
  std::vector<std::size_t> survivors;
  return intersect_halfspaces(hs, rec_dirs, survivors, eps);
}

Polyhedron2 intersect_halfspaces(std::span<const Halfspace> hs, std::array<Vec2, 2> rec_dirs,
                                 std::vector<std::size_t>& survivors, double eps) {
  if (hs.empty()) throw EmptyInput("no halfspaces to intersect");
  const DualBase base = dual_base(ConeV{rec_dirs[0], rec_dirs[1]});
  const double basis_det = cross(base.v1, base.v2);

  // Position of each normal on the dual segment, and its offset rescaled to
  // the segment point, so parallel constraints compare directly.
  struct Entry {
    std::size_t index;
    double t;
    double offset;
  };
  std::vector<Entry> entries;
  entries.reserve(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Vec2 w = hs[i].w;
    double alpha = cross(w, base.v2) / basis_det;
    double beta = cross(base.v1, w) / basis_det;
    const double scale = std::abs(alpha) + std::abs(beta);
    if (!(scale > 0.0) || !std::isfinite(hs[i].q)) {
      throw InvalidInput("halfspace normal must be nonzero and finite");
    }
    if (alpha < -1e-12 * scale || beta < -1e-12 * scale) {
      throw InvalidInput("halfspace normal outside the dual cone");
    }
    alpha = std::max(alpha, 0.0);
    beta = std::max(beta, 0.0);
    entries.push_back({i, beta / (alpha + beta), hs[i].q / (alpha + beta)});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.t < b.t; });

  // Parallel normals: only the tightest constraint matters.
  std::vector<Entry> distinct;
  for (const Entry& e : entries) {
    if (!distinct.empty() && e.t - distinct.back().t <= 1e-12) {
      if (e.offset > distinct.back().offset) distinct.back() = e;
      continue;
    }
    distinct.push_back(e);
  }

  // Normals sorted by angle over less than half a turn: the boundary is a
  // convex chain, and the top of the stack is redundant once the meeting
  // point of its neighbours already satisfies it.
  std::vector<std::size_t> stack;
  for (const Entry& e : distinct) {
    const Halfspace& next = hs[e.index];
    while (stack.size() >= 2) {
      const Point2 meet = boundary_meet(hs[stack[stack.size() - 2]], next);
      if (!hs[stack.back()].contains(meet, eps)) break;
      stack.pop_back();
    }
    stack.push_back(e.index);
  }

  Polyhedron2 poly;
  poly.rec_dirs = {rec_dirs[0], rec_dirs[1]};
  for (std::size_t idx : stack) poly.hrep.push_back(hs[idx]);
  for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
    poly.vertices.push_back(boundary_meet(hs[stack[i]], hs[stack[i + 1]]));
  }
  std::sort(poly.vertices.begin(), poly.vertices.end(), lex_less);
  survivors = std::move(stack);
  return poly;
}

Polyhedron2 intersect_halfspaces_in_box(std::span<const Halfspace> hs, Point2 lo, Point2 hi,
                                        double eps) {
  if (hs.empty()) throw EmptyInput("no halfspaces to intersect");
  const double scale = std::max({1.0, std::abs(lo.x), std::abs(lo.y), std::abs(hi.x),
                                 std::abs(hi.y)});
  const double merge_tol = 1e-9 * scale;

  // Sutherland-Hodgman against one halfspace at a time; counter-clockwise.
  std::vector<Point2> poly{lo, {hi.x, lo.y}, hi, {lo.x, hi.y}};
  std::vector<Point2> next;
  for (const Halfspace& h : hs) {
    next.clear();
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point2 p = poly[i];
      const Point2 q = poly[(i + 1) % poly.size()];
      const double dp = dot(h.w, p) - h.q;
      const double dq = dot(h.w, q) - h.q;
      const bool p_in = dp >= -eps;
      const bool q_in = dq >= -eps;
      if (p_in) next.push_back(p);
      if (p_in != q_in) {
        const double t = std::clamp(dp / (dp - dq), 0.0, 1.0);
        next.push_back(p + t * (q - p));
      }
    }
    poly.swap(next);
    if (poly.empty()) break;
  }

  Polyhedron2 result;
  if (poly.empty()) {
    result.empty = true;
    return result;
  }

  // Merge coincident vertices, then drop vertices interior to an edge.
  std::vector<Point2> ring;
  for (const Point2& p : poly) {
    if (ring.empty() || norm(p - ring.back()) > merge_tol) ring.push_back(p);
  }
  while (ring.size() > 1 && norm(ring.front() - ring.back()) <= merge_tol) ring.pop_back();
  if (ring.size() >= 3) {
    bool changed = true;
    while (changed && ring.size() >= 3) {
      changed = false;
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2 a = ring[(i + ring.size() - 1) % ring.size()];
        const Point2 b = ring[i];
        const Point2 c = ring[(i + 1) % ring.size()];
        if (std::abs(cross(b - a, c - b)) <= merge_tol * std::max(norm(b - a), norm(c - b))) {
          ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
  }

  auto tight = [&](const Halfspace& h, Point2 p) {
    return std::abs(dot(h.w, p) - h.q) <= std::max(eps, 1e-9 * norm(h.w) * scale);
  };

  if (ring.size() >= 3) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point2 a = ring[i];
      const Point2 b = ring[(i + 1) % ring.size()];
      auto it = std::find_if(hs.begin(), hs.end(),
                             [&](const Halfspace& h) { return tight(h, a) && tight(h, b); });
      if (it != hs.end()) result.hrep.push_back(*it);
    }
  } else {
    // Point or segment: keep every supporting halfspace, one per direction.
    std::vector<Halfspace> support;
    for (const Halfspace& h : hs) {
      if (!std::all_of(ring.begin(), ring.end(), [&](Point2 p) { return tight(h, p); })) continue;
      const bool seen = std::any_of(support.begin(), support.end(), [&](const Halfspace& s) {
        return std::abs(cross(s.w, h.w)) <= 1e-12 * norm(s.w) * norm(h.w) && dot(s.w, h.w) > 0.0;
      });
      if (!seen) support.push_back(h);
    }
    result.hrep = std::move(support);
  }
  result.vertices = std::move(ring);
  std::sort(result.vertices.begin(), result.vertices.end(), lex_less);
  return result;
}

}  // namespace conedepth
