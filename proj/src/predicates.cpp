#include "gridfree/predicates.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace gridfree {

namespace {

bool distinct3(Point a, Point b, Point c) { return a != b && a != c && b != c; }

bool distinct4(Point a, Point b, Point c, Point d) {
    return distinct3(a, b, c) && d != a && d != b && d != c;
}

bool any_three_collinear(Point a, Point b, Point c, Point d) {
    return is_collinear(a, b, c) || is_collinear(a, b, d) || is_collinear(a, c, d) ||
           is_collinear(b, c, d);
}

// The three splits of {a,b,c,d} into two unordered pairs, as index pairs.
constexpr std::array<std::array<int, 4>, 3> kPairSplits{{
    {0, 1, 2, 3},   // {a,b} | {c,d}
    {0, 2, 1, 3},   // {a,c} | {b,d}
    {0, 3, 1, 2},   // {a,d} | {b,c}
}};

// Vertical-axis kite with the labeled split: axis pair {p,q} (same x),
// mirror pair {r,s} (same y, symmetric about the axis).
bool axis_kite_split(Point p, Point q, Point r, Point s, bool allow_flat) {
    if (p.x != q.x) return false;                 // p.y != q.y since distinct
    if (r.y != s.y) return false;
    if (r.x + s.x != 2 * p.x) return false;
    if (r.x == s.x) return false;                 // mirror offset s >= 1
    if (!allow_flat && (r.y == p.y || r.y == q.y)) return false;
    return true;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> primitive_dir(std::int64_t dx, std::int64_t dy) {
    const std::int64_t g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
    dx /= g;
    dy /= g;
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    return {dx, dy};
}

bool is_collinear(Point a, Point b, Point c) { return cross(b - a, c - a) == 0; }

bool is_parallelogram(Point a, Point b, Point c, Point d, bool allow_degenerate) {
    if (!distinct4(a, b, c, d)) return false;
    const std::array<Point, 4> p{a, b, c, d};
    bool found = false;
    for (const auto& s : kPairSplits) {
        if (p[s[0]] + p[s[1]] == p[s[2]] + p[s[3]]) {
            found = true;
            break;
        }
    }
    if (!found) return false;
    if (!allow_degenerate && any_three_collinear(a, b, c, d)) return false;
    return true;
}

bool is_rhombus(Point a, Point b, Point c, Point d) {
    if (!distinct4(a, b, c, d)) return false;
    const std::array<Point, 4> p{a, b, c, d};
    for (const auto& s : kPairSplits) {
        // Split into diagonals {p0,p1} and {p2,p3}: common midpoint plus
        // perpendicular diagonals characterize the rhombus.
        if (p[s[0]] + p[s[1]] == p[s[2]] + p[s[3]] &&
            dot(p[s[1]] - p[s[0]], p[s[3]] - p[s[2]]) == 0) {
            return true;
        }
    }
    return false;
}

bool is_axis_kite(Point a, Point b, Point c, Point d, bool allow_flat) {
    if (!distinct4(a, b, c, d)) return false;
    const std::array<Point, 4> p{a, b, c, d};
    for (const auto& s : kPairSplits) {
        const Point t0 = p[s[0]], t1 = p[s[1]], t2 = p[s[2]], t3 = p[s[3]];
        if (axis_kite_split(t0, t1, t2, t3, allow_flat)) return true;
        if (axis_kite_split(t2, t3, t0, t1, allow_flat)) return true;
        // Horizontal axis: swap the roles of x and y.
        const Point u0{t0.y, t0.x}, u1{t1.y, t1.x}, u2{t2.y, t2.x}, u3{t3.y, t3.x};
        if (axis_kite_split(u0, u1, u2, u3, allow_flat)) return true;
        if (axis_kite_split(u2, u3, u0, u1, allow_flat)) return true;
    }
    return false;
}

bool is_square(Point a, Point b, Point c, Point d) {
    if (!distinct4(a, b, c, d)) return false;
    const std::array<Point, 4> p{a, b, c, d};
    for (const auto& s : kPairSplits) {
        const Point d1 = p[s[1]] - p[s[0]], d2 = p[s[3]] - p[s[2]];
        if (p[s[0]] + p[s[1]] == p[s[2]] + p[s[3]] && dot(d1, d2) == 0 &&
            dot(d1, d1) == dot(d2, d2)) {
            return true;
        }
    }
    return false;
}

bool is_axis_square(Point a, Point b, Point c, Point d) {
    if (!is_axis_rectangle(a, b, c, d)) return false;
    std::array<std::int64_t, 4> xs{a.x, b.x, c.x, d.x}, ys{a.y, b.y, c.y, d.y};
    const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
    const auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
    return *xmax - *xmin == *ymax - *ymin;
}

bool is_axis_rectangle(Point a, Point b, Point c, Point d) {
    if (!distinct4(a, b, c, d)) return false;
    std::array<Point, 4> p{a, b, c, d};
    std::sort(p.begin(), p.end());
    // Sorted corners of {x1,x2} x {y1,y2}: (x1,y1),(x1,y2),(x2,y1),(x2,y2).
    return p[0].x == p[1].x && p[2].x == p[3].x && p[0].x != p[2].x &&
           p[0].y == p[2].y && p[1].y == p[3].y && p[0].y != p[1].y;
}

bool is_isosceles(Point a, Point b, Point c, bool allow_flat) {
    if (!distinct3(a, b, c)) return false;
    const std::int64_t ab = dist2(a, b), ac = dist2(a, c), bc = dist2(b, c);
    if (ab != ac && ab != bc && ac != bc) return false;
    if (!allow_flat && is_collinear(a, b, c)) return false;
    return true;
}

bool is_corner(Point a, Point b, Point c) {
    const std::array<Point, 3> p{a, b, c};
    // Apex candidate q, others r and s: r = q + (d,0), s = q + (0,d).
    for (int i = 0; i < 3; ++i) {
        const Point q = p[i], r = p[(i + 1) % 3], s = p[(i + 2) % 3];
        if (r.y == q.y && s.x == q.x && r.x - q.x != 0 && r.x - q.x == s.y - q.y) return true;
        if (s.y == q.y && r.x == q.x && s.x - q.x != 0 && s.x - q.x == r.y - q.y) return true;
    }
    return false;
}

bool is_iso_right(Point a, Point b, Point c) {
    if (!distinct3(a, b, c)) return false;
    const std::array<Point, 3> p{a, b, c};
    for (int i = 0; i < 3; ++i) {
        const Point u = p[(i + 1) % 3] - p[i], v = p[(i + 2) % 3] - p[i];
        if (dot(u, v) == 0 && dot(u, u) == dot(v, v)) return true;
    }
    return false;
}

bool is_concyclic4(Point a, Point b, Point c, Point d) {
    if (!distinct4(a, b, c, d)) return false;
    // Translate by a: the 4x4 circle determinant reduces to a 3x3 with rows
    // (x^2+y^2, x, y) of the translated points. Exact in 128-bit.
    const Point p = b - a, q = c - a, r = d - a;
    using I = __int128;
    const I pz = I(p.x) * p.x + I(p.y) * p.y;
    const I qz = I(q.x) * q.x + I(q.y) * q.y;
    const I rz = I(r.x) * r.x + I(r.y) * r.y;
    const I det = pz * (I(q.x) * r.y - I(q.y) * r.x) - qz * (I(p.x) * r.y - I(p.y) * r.x) +
                  rz * (I(p.x) * q.y - I(p.y) * q.x);
    return det == 0;
}

bool is_axis_iso_trapezoid(Point a, Point b, Point c, Point d, bool include_equal_sides) {
    if (!distinct4(a, b, c, d)) return false;
    const std::array<Point, 4> orig{a, b, c, d};
    for (int orient = 0; orient < 2; ++orient) {
        std::array<Point, 4> p = orig;
        if (orient == 1) {
            for (Point& t : p) std::swap(t.x, t.y);
        }
        std::sort(p.begin(), p.end(), [](Point l, Point r) {
            return l.y != r.y ? l.y < r.y : l.x < r.x;
        });
        // Need exactly two rows of two points each.
        if (p[0].y != p[1].y || p[2].y != p[3].y || p[1].y == p[2].y) continue;
        if (p[0].x + p[1].x != p[2].x + p[3].x) continue;   // shared bisector
        if (!include_equal_sides && p[1].x - p[0].x == p[3].x - p[2].x) continue;
        return true;
    }
    return false;
}

bool matches(const ConfigClass& cls, std::span<const Point> pts) {
    switch (cls.kind) {
        case ConfigKind::Collinear:
            if (cls.k == 3) return is_collinear(pts[0], pts[1], pts[2]);
            // Four distinct points, all on one line (p0 != p1 after the
            // distinctness check, so two triples pin the whole quadruple).
            return distinct4(pts[0], pts[1], pts[2], pts[3]) &&
                   is_collinear(pts[0], pts[1], pts[2]) && is_collinear(pts[0], pts[1], pts[3]);
        case ConfigKind::Parallelogram:
            return is_parallelogram(pts[0], pts[1], pts[2], pts[3], cls.allow_degenerate);
        case ConfigKind::Rhombus:
            return is_rhombus(pts[0], pts[1], pts[2], pts[3]);
        case ConfigKind::AxisKite:
            return is_axis_kite(pts[0], pts[1], pts[2], pts[3], cls.allow_flat);
        case ConfigKind::AxisSquare:
            return is_axis_square(pts[0], pts[1], pts[2], pts[3]);
        case ConfigKind::Square:
            return is_square(pts[0], pts[1], pts[2], pts[3]);
        case ConfigKind::AxisRectangle:
            return is_axis_rectangle(pts[0], pts[1], pts[2], pts[3]);
        case ConfigKind::IsoscelesTriangle:
            return is_isosceles(pts[0], pts[1], pts[2], cls.allow_flat);
        case ConfigKind::Corner:
            return is_corner(pts[0], pts[1], pts[2]);
        case ConfigKind::IsoscelesRightTriangle:
            return is_iso_right(pts[0], pts[1], pts[2]);
        case ConfigKind::Concyclic4:
            return is_concyclic4(pts[0], pts[1], pts[2], pts[3]);
        case ConfigKind::AxisIsoTrapezoid:
            return is_axis_iso_trapezoid(pts[0], pts[1], pts[2], pts[3],
                                         cls.include_equal_sides);
    }
    return false;
}

}  // namespace gridfree
