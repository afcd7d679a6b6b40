#pragma once

#include <span>

#include "gridfree/grid.hpp"

namespace gridfree {

// Exact tuple-level tests. All predicates take unordered inputs and search
// over the (at most 24) labelings internally; no floating point anywhere.

/// True iff (b-a) x (c-a) = 0, repeated points included.
bool is_collinear(Point a, Point b, Point c);

/// True iff the points are pairwise distinct and some labeling p1,p2,p3,p4
/// satisfies p1+p3 = p2+p4. With allow_degenerate = false, additionally no
/// three of the four may be collinear.
bool is_parallelogram(Point a, Point b, Point c, Point d, bool allow_degenerate = true);

/// Parallelogram with perpendicular diagonals sharing a midpoint. Squares count.
bool is_rhombus(Point a, Point b, Point c, Point d);

/// Quadruple symmetric across a vertical or horizontal axis: two points on
/// the axis line plus a mirror pair. Includes darts; allow_flat = false
/// rejects the three-collinear case.
bool is_axis_kite(Point a, Point b, Point c, Point d, bool allow_flat = true);

/// Rhombus with equal squared diagonals (any orientation).
bool is_square(Point a, Point b, Point c, Point d);

/// Square with axis-parallel sides.
bool is_axis_square(Point a, Point b, Point c, Point d);

/// {(x1,y1),(x1,y2),(x2,y1),(x2,y2)} with x1 != x2, y1 != y2.
bool is_axis_rectangle(Point a, Point b, Point c, Point d);

/// At least two of the three squared pairwise distances equal;
/// allow_flat = false additionally rejects collinear triples.
bool is_isosceles(Point a, Point b, Point c, bool allow_flat = true);

/// The set {(a,b),(a+d,b),(a,b+d)} for some d != 0.
bool is_corner(Point a, Point b, Point c);

/// Right angle between two equal-length legs, any orientation.
bool is_iso_right(Point a, Point b, Point c);

/// Vanishing 4x4 determinant with rows (x^2+y^2, x, y, 1); collinear
/// quadruples count as concyclic.
bool is_concyclic4(Point a, Point b, Point c, Point d);

/// Two parallel axis-parallel sides sharing a perpendicular bisector;
/// include_equal_sides = false excludes axis rectangles.
bool is_axis_iso_trapezoid(Point a, Point b, Point c, Point d, bool include_equal_sides = false);

/// Dispatch on a ConfigClass; pts.size() must equal cls.arity().
bool matches(const ConfigClass& cls, std::span<const Point> pts);

/// Primitive direction of (dx,dy) with fixed sign normalization
/// (first nonzero component positive). (dx,dy) must be nonzero.
std::pair<std::int64_t, std::int64_t> primitive_dir(std::int64_t dx, std::int64_t dy);

}  // namespace gridfree
