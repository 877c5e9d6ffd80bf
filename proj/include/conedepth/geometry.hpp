// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace conedepth {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

/// Data points and query points share the vector representation.
using Point2 = Vec2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline bool is_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Numerical tolerances shared by all algorithms.
struct Tolerance {
  /// Absolute tolerance on scalar products w.x (ties, boundary tests).
  double eps = 1e-9;
  /// Determinant threshold for linear independence.
  double eps_rank = 1e-12;
  /// Critical rotation parameters below this are "tied at zero".
  double eps_s = 1e-12;
};

/// Closed convex cone {s1*b1 + s2*b2 | s1, s2 >= 0} given by its generators.
/// Validated lazily: every operation taking a cone checks it.
struct ConeV {
  Vec2 b1;
  Vec2 b2;

  static constexpr ConeV orthant() { return {{1.0, 0.0}, {0.0, 1.0}}; }
};

/// Throws DegenerateCone / UnsupportedCone unless `cone` is pointed with
/// nonempty interior.
void validate_cone(const ConeV& cone, double eps_rank = Tolerance{}.eps_rank);

/// Whether d is a conic combination of the generators (within eps).
bool cone_contains(const ConeV& cone, Vec2 d, double eps = Tolerance{}.eps);

/// Generators of the dual cone; v1 is orthogonal to b1 and v2 to b2. The
/// segment between them is the base of the dual cone.
struct DualBase {
  Vec2 v1;
  Vec2 v2;
};

DualBase dual_base(const ConeV& cone, double eps_rank = Tolerance{}.eps_rank);

/// (1 - s) v1 + s v2 for s in [0, 1].
Vec2 weight_at(const DualBase& base, double s);

/// {z | w.z >= q}
struct Halfspace {
  Vec2 w;
  double q = 0.0;

  bool contains(Point2 z, double eps = Tolerance{}.eps) const { return dot(w, z) >= q - eps; }
};

/// Convex polyhedron kept in both representations.
///
/// `hrep` is minimal and, for polyhedra with a recession cone, ordered by the
/// angle of the normals from the first to the second dual generator.
/// `vertices` are sorted by x, then y. `rec_dirs` holds the two generators of
/// the recession cone, or nothing for a bounded polygon.
struct Polyhedron2 {
  std::vector<Halfspace> hrep;
  std::vector<Point2> vertices;
  std::vector<Vec2> rec_dirs;
  bool empty = false;
};

bool contains(const Polyhedron2& poly, Point2 z, double eps = Tolerance{}.eps);

struct Mat2 {
  double a = 1.0, b = 0.0;  // first row
  double c = 0.0, d = 1.0;  // second row

  constexpr Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  constexpr Mat2 operator*(const Mat2& m) const {
    return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
  }
  constexpr Mat2 transposed() const { return {a, c, b, d}; }
  constexpr double det() const { return a * d - b * c; }
};

/// Linear map sending the cone generators to the unit vectors, with inverse.
struct AffineMap {
  Mat2 A;
  Mat2 A_inv;

  Vec2 apply(Vec2 z) const { return A * z; }
  Vec2 apply_inverse(Vec2 z) const { return A_inv * z; }
};

AffineMap standardizer(const ConeV& cone, double eps_rank = Tolerance{}.eps_rank);

/// Intersection of halfspaces whose normals lie in the dual of the cone
/// generated by `rec_dirs`. Redundant halfspaces are dropped; the result has
/// recession cone cone(rec_dirs), which is the intersection itself when the
/// normals include both dual generators. Throws EmptyInput on an empty list and
/// InvalidInput if a normal leaves the dual cone.
Polyhedron2 intersect_halfspaces(std::span<const Halfspace> hs, std::array<Vec2, 2> rec_dirs,
                                 double eps = Tolerance{}.eps);

/// Same, but also reports which inputs survived (indices into `hs`, in the
/// order of the returned hrep).
Polyhedron2 intersect_halfspaces(std::span<const Halfspace> hs, std::array<Vec2, 2> rec_dirs,
                                 std::vector<std::size_t>& survivors, double eps = Tolerance{}.eps);

/// Intersection of arbitrary halfspaces clipped to the axis-aligned box
/// [lo, hi]. Meant for sets known to lie inside the box (depth regions); the
/// result may be empty, a point, a segment or a polygon. Box edges never
/// appear in the returned hrep.
Polyhedron2 intersect_halfspaces_in_box(std::span<const Halfspace> hs, Point2 lo, Point2 hi,
                                        double eps = Tolerance{}.eps);

}  // namespace conedepth
