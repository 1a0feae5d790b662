#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mapfold/fold_step.hpp"
#include "mapfold/rational.hpp"

namespace mapfold {

struct Vec2 {
  Rat x, y;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const Vec2&) const = default;
};

// Cross product z-component of (b-a) x (c-a).
Rat cross(const Vec2& a, const Vec2& b, const Vec2& c);

// Signed side of a point relative to a fold line: negative on the Left/neg
// side (x < offset, y < offset, below the diagonal), zero on the line.
Rat line_side(const Line2D& l, const Vec2& p);

// Parameter of a point along a line (y for vertical lines, x otherwise).
Rat line_param(const Line2D& l, const Vec2& p);

// The line through two distinct points, when axis-parallel or 45 degrees.
std::optional<Line2D> line_through(const Vec2& a, const Vec2& b);

// Plane isometry restricted to the dihedral group of the square composed
// with a translation: p -> L*p + t.
struct Iso2 {
  int lin = 0;  // 0..7 index into the dihedral table
  Vec2 t;

  Vec2 apply(const Vec2& p) const;
  Iso2 after(const Iso2& inner) const;  // this ∘ inner
  bool reverses_orientation() const;     // paper top faces down

  static Iso2 identity() { return {}; }
  static Iso2 reflection(const Line2D& l);

  bool operator==(const Iso2&) const = default;
};

// Image of a line under an isometry (axis/diagonal lines map to such lines).
Line2D apply_to_line(const Iso2& iso, const Line2D& l);

// Simple polygon with rational vertices (no self-intersection assumed where
// stated). Vertices are stored counterclockwise after normalize().
struct Polygon {
  std::vector<Vec2> pts;

  Rat area2() const;  // twice the signed area
  void normalize();   // force counterclockwise orientation
  bool contains_point_strict(const Vec2& p) const;  // strictly inside

  // Exact ear-clipping triangulation of a simple polygon (CCW).
  std::vector<std::array<Vec2, 3>> triangulate() const;
};

// Positive-area overlap of two triangles (exact).
bool triangles_overlap(const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b);

// Twice the area of the intersection of a triangle with the half plane
// side(l, p) <= 0 (sign = -1) or >= 0 (sign = +1).
Rat triangle_halfplane_area2(const std::array<Vec2, 3>& t, const Line2D& l, int sign);

// Interval of line parameters where the triangle's interior crosses the
// line, or nothing if it does not straddle it.
std::optional<std::pair<Rat, Rat>> triangle_line_crossing(const std::array<Vec2, 3>& t,
                                                          const Line2D& l);

// Contact of a triangle edge lying on the line: parameter interval plus the
// side (-1/+1) of the triangle's interior. Degenerate contacts are skipped.
struct LineContact {
  Rat lo, hi;
  int side = 0;  // -1, +1, or 0 when the triangle straddles
};
std::vector<LineContact> triangle_line_contacts(const std::array<Vec2, 3>& t, const Line2D& l);

}  // namespace mapfold
