#include "gridfree/detect.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "gridfree/errors.hpp"
#include "gridfree/pool.hpp"
#include "gridfree/predicates.hpp"
#include "midpoint.hpp"

namespace gridfree {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t choose2(std::uint64_t t) { return t * (t - 1) / 2; }
constexpr std::uint64_t choose3(std::uint64_t t) {
    return t < 3 ? 0 : t * (t - 1) * (t - 2) / 6;
}
constexpr std::uint64_t choose4(std::uint64_t t) {
    return t < 4 ? 0 : t * (t - 1) * (t - 2) * (t - 3) / 24;
}
std::uint64_t choose_k(std::uint64_t t, int k) {
    if (k == 2) return choose2(t);
    if (k == 3) return choose3(t);
    return choose4(t);
}

// Row/column views in deterministic (ascending) order.
using Lines = std::map<std::int64_t, std::vector<std::int64_t>>;

Lines rows_of(const PointSet& ps) {
    Lines rows;
    for (const Point& p : ps.points()) rows[p.y].push_back(p.x);
    for (auto& [y, xs] : rows) std::sort(xs.begin(), xs.end());
    return rows;
}

Lines cols_of(const PointSet& ps) {
    Lines cols;
    for (const Point& p : ps.points()) cols[p.x].push_back(p.y);
    return cols;   // canonical order already yields ascending ys
}

std::vector<Point> sorted_tuple(std::initializer_list<Point> pts) {
    std::vector<Point> v(pts);
    std::sort(v.begin(), v.end());
    return v;
}

// ---------------------------------------------------------------- collinear

// Calls fn(anchor, direction_group_points, has_negative_side) for each
// (anchor, primitive direction); the anchor is the lexicographic minimum of
// its line iff no point sits on the negative side.
std::uint64_t collinear_count(const PointSet& ps, int k) {
    const auto& pts = ps.points();
    std::uint64_t total = 0;
    std::unordered_map<std::uint64_t, std::pair<std::uint32_t, bool>> groups;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        groups.clear();
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            const auto [dx, dy] = primitive_dir(pts[j].x - pts[i].x, pts[j].y - pts[i].y);
            const std::uint64_t key = (static_cast<std::uint64_t>(dx) << 23) |
                                      static_cast<std::uint64_t>(dy + (std::int64_t{1} << 22));
            auto& g = groups[key];
            ++g.first;
            if (pts[j] < pts[i]) g.second = true;
        }
        for (const auto& [key, g] : groups) {
            if (!g.second) total += choose_k(g.first + 1, k);   // line counted at its minimum
        }
    }
    return total;
}

std::optional<Witness> collinear_find(const PointSet& ps, const ConfigClass& cls) {
    const int k = cls.k;
    const auto& pts = ps.points();
    std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::vector<Point>, bool>> groups;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        groups.clear();
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            auto& g = groups[primitive_dir(pts[j].x - pts[i].x, pts[j].y - pts[i].y)];
            g.first.push_back(pts[j]);
            if (pts[j] < pts[i]) g.second = true;
        }
        for (auto& [dir, g] : groups) {
            if (g.second || g.first.size() + 1 < static_cast<std::size_t>(k)) continue;
            std::sort(g.first.begin(), g.first.end());
            std::vector<Point> w{pts[i]};
            w.insert(w.end(), g.first.begin(), g.first.begin() + (k - 1));
            return Witness{cls, std::move(w)};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- axis kite

struct PairKeyHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const noexcept {
        return PointHash{}(Point{k.first, k.second});
    }
};

// Mirror pairs across vertical axes: fills H[(axis x0, row y)] and the
// aggregate per axis. `transposed` swaps the roles of x and y.
struct MirrorPairs {
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::uint64_t, PairKeyHash>
        by_center;                                            // (axis, row) -> pairs
    std::unordered_map<std::int64_t, std::uint64_t> by_axis;  // axis -> pairs
    std::uint64_t flat = 0;   // mirror pairs whose row point on the axis exists, weighted
};

MirrorPairs mirror_pairs(const Lines& lines, const Lines& axis_lines, const PointSet& ps,
                         bool transposed) {
    MirrorPairs mp;
    for (const auto& [y, xs] : lines) {
        for (std::size_t a = 0; a < xs.size(); ++a) {
            for (std::size_t b = a + 1; b < xs.size(); ++b) {
                const std::int64_t s = xs[a] + xs[b];
                if (s % 2 != 0) continue;
                const std::int64_t x0 = s / 2;
                ++mp.by_center[{x0, y}];
                ++mp.by_axis[x0];
                const Point axis_pt = transposed ? Point{y, x0} : Point{x0, y};
                if (ps.contains(axis_pt)) {
                    const auto it = axis_lines.find(x0);
                    if (it != axis_lines.end()) mp.flat += it->second.size() - 1;
                }
            }
        }
    }
    return mp;
}

std::uint64_t axis_kite_count(const PointSet& ps, bool allow_flat) {
    const Lines rows = rows_of(ps), cols = cols_of(ps);
    const MirrorPairs horiz = mirror_pairs(rows, cols, ps, false);  // vertical axis
    const MirrorPairs vert = mirror_pairs(cols, rows, ps, true);    // horizontal axis

    std::uint64_t v_total = 0, h_total = 0;
    for (const auto& [x0, h] : horiz.by_axis) {
        const auto it = cols.find(x0);
        if (it != cols.end()) v_total += h * choose2(it->second.size());
    }
    for (const auto& [y0, h] : vert.by_axis) {
        const auto it = rows.find(y0);
        if (it != rows.end()) h_total += h * choose2(it->second.size());
    }
    // Doubly-counted sets are exactly the rhombi with axis-parallel
    // diagonals: a horizontal mirror pair and a vertical mirror pair
    // sharing their center.
    std::uint64_t diamonds = 0;
    for (const auto& [center, hcnt] : horiz.by_center) {
        const auto it = vert.by_center.find({center.second, center.first});
        if (it != vert.by_center.end()) diamonds += hcnt * it->second;
    }
    std::uint64_t total = v_total + h_total - diamonds;
    if (!allow_flat) total -= horiz.flat + vert.flat;
    return total;
}

std::optional<Witness> axis_kite_find(const PointSet& ps, const ConfigClass& cls) {
    const Lines rows = rows_of(ps), cols = cols_of(ps);
    // Vertical axis first, then horizontal; rows and pairs ascending.
    for (int orient = 0; orient < 2; ++orient) {
        const Lines& scan = orient == 0 ? rows : cols;
        const Lines& axis = orient == 0 ? cols : rows;
        for (const auto& [line, vals] : scan) {
            for (std::size_t a = 0; a < vals.size(); ++a) {
                for (std::size_t b = a + 1; b < vals.size(); ++b) {
                    const std::int64_t s = vals[a] + vals[b];
                    if (s % 2 != 0) continue;
                    const std::int64_t c0 = s / 2;
                    const auto it = axis.find(c0);
                    if (it == axis.end()) continue;
                    std::vector<std::int64_t> axis_vals;
                    for (std::int64_t v : it->second) {
                        if (cls.allow_flat || v != line) axis_vals.push_back(v);
                        if (axis_vals.size() == 2) break;
                    }
                    if (axis_vals.size() < 2) continue;
                    std::vector<Point> w =
                        orient == 0
                            ? sorted_tuple({{vals[a], line},
                                            {vals[b], line},
                                            {c0, axis_vals[0]},
                                            {c0, axis_vals[1]}})
                            : sorted_tuple({{line, vals[a]},
                                            {line, vals[b]},
                                            {axis_vals[0], c0},
                                            {axis_vals[1], c0}});
                    return Witness{cls, std::move(w)};
                }
            }
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ squares

std::uint64_t square_fast_count(const PointSet& ps) {
    const auto& pts = ps.points();
    const std::uint64_t hits = parallel_sum(0, static_cast<std::int64_t>(pts.size()),
        [&](std::int64_t lo, std::int64_t hi) {
            std::uint64_t h = 0;
            for (std::int64_t i = lo; i < hi; ++i) {
                for (std::size_t j = 0; j < pts.size(); ++j) {
                    if (static_cast<std::size_t>(i) == j) continue;
                    const Point p = pts[i], q = pts[j];
                    const Point r{-(q.y - p.y), q.x - p.x};   // edge rotated 90 deg
                    if (ps.contains(q + r) && ps.contains(p + r)) ++h;
                }
            }
            return h;
        });
    // Each square is hit by its four edges traversed in one rotational
    // direction.
    return hits / 4;
}

std::optional<Witness> square_find(const PointSet& ps) {
    const auto& pts = ps.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            const Point p = pts[i], q = pts[j];
            const Point r{-(q.y - p.y), q.x - p.x};
            if (ps.contains(q + r) && ps.contains(p + r)) {
                return Witness{ConfigClass::square(), sorted_tuple({p, q, q + r, p + r})};
            }
        }
    }
    return std::nullopt;
}

std::uint64_t axis_square_count(const PointSet& ps) {
    const Lines cols = cols_of(ps);
    std::uint64_t total = 0;
    for (const auto& [x, ys] : cols) {
        for (std::size_t a = 0; a < ys.size(); ++a) {
            for (std::size_t b = a + 1; b < ys.size(); ++b) {
                const std::int64_t d = ys[b] - ys[a];
                const auto it = cols.find(x + d);   // left column anchors the square
                if (it == cols.end()) continue;
                if (ps.contains({x + d, ys[a]}) && ps.contains({x + d, ys[b]})) ++total;
            }
        }
    }
    return total;
}

std::optional<Witness> axis_square_find(const PointSet& ps) {
    const Lines cols = cols_of(ps);
    for (const auto& [x, ys] : cols) {
        for (std::size_t a = 0; a < ys.size(); ++a) {
            for (std::size_t b = a + 1; b < ys.size(); ++b) {
                const std::int64_t d = ys[b] - ys[a];
                if (ps.contains({x + d, ys[a]}) && ps.contains({x + d, ys[b]})) {
                    return Witness{ConfigClass::axis_square(),
                                   sorted_tuple({{x, ys[a]},
                                                 {x, ys[b]},
                                                 {x + d, ys[a]},
                                                 {x + d, ys[b]}})};
                }
            }
        }
    }
    return std::nullopt;
}

// --------------------------------------------------------------- rectangles

std::uint64_t axis_rectangle_count(const PointSet& ps) {
    const Lines rows = rows_of(ps);
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::uint64_t, PairKeyHash>
        col_pairs;
    for (const auto& [y, xs] : rows) {
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a + 1; b < xs.size(); ++b) ++col_pairs[{xs[a], xs[b]}];
    }
    std::uint64_t total = 0;
    for (const auto& [key, t] : col_pairs) total += choose2(t);
    return total;
}

std::optional<Witness> axis_rectangle_find(const PointSet& ps) {
    const Lines rows = rows_of(ps);
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> first_row;
    for (const auto& [y, xs] : rows) {
        for (std::size_t a = 0; a < xs.size(); ++a) {
            for (std::size_t b = a + 1; b < xs.size(); ++b) {
                const auto [it, inserted] = first_row.try_emplace({xs[a], xs[b]}, y);
                if (!inserted) {
                    return Witness{ConfigClass::axis_rectangle(),
                                   sorted_tuple({{xs[a], it->second},
                                                 {xs[b], it->second},
                                                 {xs[a], y},
                                                 {xs[b], y}})};
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- isosceles

std::uint64_t isosceles_count(const PointSet& ps, bool allow_flat) {
    const auto& pts = ps.points();
    std::uint64_t total = 0;
    std::unordered_map<std::int64_t, std::uint32_t> by_dist;
    for (const Point& apex : pts) {
        by_dist.clear();
        for (const Point& p : pts) {
            if (p != apex) ++by_dist[dist2(apex, p)];
        }
        for (const auto& [d, t] : by_dist) total += choose2(t);
    }
    if (!allow_flat) {
        // Flat isosceles = endpoints with their integral midpoint present.
        std::uint64_t flat = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const std::int64_t sx = pts[i].x + pts[j].x, sy = pts[i].y + pts[j].y;
                if (sx % 2 == 0 && sy % 2 == 0 && ps.contains({sx / 2, sy / 2})) ++flat;
            }
        }
        total -= flat;
    }
    return total;
}

std::optional<Witness> isosceles_find(const PointSet& ps, const ConfigClass& cls) {
    const auto& pts = ps.points();
    std::unordered_map<std::int64_t, std::vector<Point>> by_dist;
    for (const Point& apex : pts) {
        by_dist.clear();
        for (const Point& p : pts) {
            if (p == apex) continue;
            auto& group = by_dist[dist2(apex, p)];
            for (const Point& other : group) {
                if (cls.allow_flat || !is_collinear(apex, other, p)) {
                    return Witness{cls, sorted_tuple({apex, other, p})};
                }
            }
            group.push_back(p);
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------- corners, iso-right

std::uint64_t corner_count(const PointSet& ps) {
    const Lines rows = rows_of(ps);
    std::uint64_t total = 0;
    for (const auto& [y, xs] : rows) {
        for (std::int64_t apex_x : xs) {
            for (std::int64_t other_x : xs) {
                if (other_x == apex_x) continue;
                if (ps.contains({apex_x, y + (other_x - apex_x)})) ++total;
            }
        }
    }
    return total;
}

std::optional<Witness> corner_find(const PointSet& ps) {
    for (const Point& apex : ps.points()) {
        // Signed leg d; apex scan in canonical order keeps this deterministic.
        for (const Point& p : ps.points()) {
            if (p.y != apex.y || p.x == apex.x) continue;
            const std::int64_t d = p.x - apex.x;
            if (ps.contains({apex.x, apex.y + d})) {
                return Witness{ConfigClass::corner(),
                               sorted_tuple({apex, p, {apex.x, apex.y + d}})};
            }
        }
    }
    return std::nullopt;
}

std::uint64_t iso_right_count(const PointSet& ps) {
    const auto& pts = ps.points();
    std::uint64_t total = 0;
    std::unordered_map<std::int64_t, std::vector<Point>> by_dist;
    for (const Point& apex : pts) {
        by_dist.clear();
        for (const Point& p : pts) {
            if (p != apex) by_dist[dist2(apex, p)].push_back(p);
        }
        for (const auto& [d, group] : by_dist) {
            for (std::size_t a = 0; a < group.size(); ++a) {
                for (std::size_t b = a + 1; b < group.size(); ++b) {
                    if (dot(group[a] - apex, group[b] - apex) == 0) ++total;
                }
            }
        }
    }
    return total;
}

std::optional<Witness> iso_right_find(const PointSet& ps) {
    const auto& pts = ps.points();
    std::unordered_map<std::int64_t, std::vector<Point>> by_dist;
    for (const Point& apex : pts) {
        by_dist.clear();
        for (const Point& p : pts) {
            if (p == apex) continue;
            auto& group = by_dist[dist2(apex, p)];
            for (const Point& other : group) {
                if (dot(other - apex, p - apex) == 0) {
                    return Witness{ConfigClass::iso_right(), sorted_tuple({apex, other, p})};
                }
            }
            group.push_back(p);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- concyclic

struct CircleKey {
    __int128 a, b, c, d;
    bool operator==(const CircleKey&) const = default;
};

struct CircleKeyHash {
    static std::uint64_t mix(__int128 v) {
        std::uint64_t z = static_cast<std::uint64_t>(v) ^
                          (static_cast<std::uint64_t>(v >> 64) * 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        return z ^ (z >> 31);
    }
    std::size_t operator()(const CircleKey& k) const noexcept {
        std::uint64_t h = mix(k.a);
        h = h * 0x100000001b3ULL ^ mix(k.b);
        h = h * 0x100000001b3ULL ^ mix(k.c);
        h = h * 0x100000001b3ULL ^ mix(k.d);
        return h;
    }
};

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Normalized coefficients of the circle (or line, a = 0) through p1..p3:
// a (x^2+y^2) + b x + c y + d = 0.
CircleKey circle_through(Point p1, Point p2, Point p3) {
    using I = __int128;
    const I z1 = I(p1.x) * p1.x + I(p1.y) * p1.y;
    const I z2 = I(p2.x) * p2.x + I(p2.y) * p2.y;
    const I z3 = I(p3.x) * p3.x + I(p3.y) * p3.y;
    auto det3 = [](I a1, I a2, I a3, I b1, I b2, I b3, I c1, I c2, I c3) {
        return a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1);
    };
    CircleKey k;
    k.a = det3(p1.x, p1.y, 1, p2.x, p2.y, 1, p3.x, p3.y, 1);
    k.b = -det3(z1, p1.y, 1, z2, p2.y, 1, z3, p3.y, 1);
    k.c = det3(z1, p1.x, 1, z2, p2.x, 1, z3, p3.x, 1);
    k.d = -det3(z1, p1.x, p1.y, z2, p2.x, p2.y, z3, p3.x, p3.y);
    __int128 g = gcd128(gcd128(k.a, k.b), gcd128(k.c, k.d));
    if (g != 0) {
        k.a /= g;
        k.b /= g;
        k.c /= g;
        k.d /= g;
    }
    const __int128 lead = k.a != 0 ? k.a : (k.b != 0 ? k.b : (k.c != 0 ? k.c : k.d));
    if (lead < 0) {
        k.a = -k.a;
        k.b = -k.b;
        k.c = -k.c;
        k.d = -k.d;
    }
    return k;
}

void ensure_concyclic_guard(const PointSet& ps) {
    if (ps.size() > kConcyclicFastGuard) {
        throw GuardExceeded("concyclic fast mode limited to " +
                            std::to_string(kConcyclicFastGuard) + " points, got " +
                            std::to_string(ps.size()));
    }
}

std::uint64_t concyclic_count(const PointSet& ps) {
    ensure_concyclic_guard(ps);
    const auto& pts = ps.points();
    std::unordered_map<CircleKey, std::uint64_t, CircleKeyHash> buckets;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t l = j + 1; l < pts.size(); ++l)
                ++buckets[circle_through(pts[i], pts[j], pts[l])];
    std::uint64_t total = 0;
    for (const auto& [key, t] : buckets) {
        // A circle through m points contributes C(m,3) triples; recover m.
        std::uint64_t m = 3;
        while (choose3(m) < t) ++m;
        total += choose4(m);
    }
    return total;
}

std::optional<Witness> concyclic_find(const PointSet& ps) {
    ensure_concyclic_guard(ps);
    const auto& pts = ps.points();
    std::unordered_map<CircleKey, std::array<Point, 3>, CircleKeyHash> first_triple;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            for (std::size_t l = j + 1; l < pts.size(); ++l) {
                const CircleKey key = circle_through(pts[i], pts[j], pts[l]);
                const std::array<Point, 3> tri{pts[i], pts[j], pts[l]};
                const auto [it, inserted] = first_triple.try_emplace(key, tri);
                if (inserted) continue;
                std::vector<Point> uni(it->second.begin(), it->second.end());
                uni.insert(uni.end(), tri.begin(), tri.end());
                std::sort(uni.begin(), uni.end());
                uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
                uni.resize(4);   // any four points of one circle or line
                return Witness{ConfigClass::concyclic4(), std::move(uni)};
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- trapezoid

// Counts same-sum pairs of horizontal point pairs; rect_only restricts to
// equal widths (which forces the same column pair, i.e. an axis rectangle).
std::uint64_t trapezoid_pass(const Lines& lines, bool subtract_equal_width,
                             std::uint64_t* rect_out) {
    std::unordered_map<std::int64_t, std::uint64_t> by_sum;
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::uint64_t, PairKeyHash>
        by_sum_line, by_sum_width;
    for (const auto& [line, vals] : lines) {
        for (std::size_t a = 0; a < vals.size(); ++a) {
            for (std::size_t b = a + 1; b < vals.size(); ++b) {
                const std::int64_t s = vals[a] + vals[b], w = vals[b] - vals[a];
                ++by_sum[s];
                ++by_sum_line[{s, line}];
                ++by_sum_width[{s, w}];
            }
        }
    }
    std::uint64_t total = 0;
    for (const auto& [s, t] : by_sum) total += choose2(t);
    for (const auto& [key, t] : by_sum_line) total -= choose2(t);
    std::uint64_t rects = 0;
    for (const auto& [key, t] : by_sum_width) rects += choose2(t);
    if (rect_out) *rect_out = rects;
    if (subtract_equal_width) total -= rects;
    return total;
}

std::uint64_t trapezoid_count(const PointSet& ps, bool include_equal_sides) {
    const Lines rows = rows_of(ps), cols = cols_of(ps);
    std::uint64_t row_rects = 0;
    const std::uint64_t row_part = trapezoid_pass(rows, !include_equal_sides, &row_rects);
    const std::uint64_t col_part = trapezoid_pass(cols, !include_equal_sides, nullptr);
    if (include_equal_sides) {
        // Sets qualifying in both orientations are exactly the axis
        // rectangles; with equal sides excluded there is no overlap.
        return row_part + col_part - row_rects;
    }
    return row_part + col_part;
}

std::optional<Witness> trapezoid_find(const PointSet& ps, const ConfigClass& cls) {
    const Lines rows = rows_of(ps), cols = cols_of(ps);
    for (int orient = 0; orient < 2; ++orient) {
        const Lines& lines = orient == 0 ? rows : cols;
        struct Base {
            std::int64_t line, lo, hi;
        };
        std::map<std::int64_t, std::vector<Base>> by_sum;
        for (const auto& [line, vals] : lines) {
            for (std::size_t a = 0; a < vals.size(); ++a)
                for (std::size_t b = a + 1; b < vals.size(); ++b)
                    by_sum[vals[a] + vals[b]].push_back({line, vals[a], vals[b]});
        }
        for (const auto& [s, bases] : by_sum) {
            for (std::size_t a = 0; a < bases.size(); ++a) {
                for (std::size_t b = a + 1; b < bases.size(); ++b) {
                    const Base &p = bases[a], &q = bases[b];
                    if (p.line == q.line) continue;
                    if (!cls.include_equal_sides && p.hi - p.lo == q.hi - q.lo) continue;
                    std::vector<Point> w =
                        orient == 0 ? sorted_tuple({{p.lo, p.line},
                                                    {p.hi, p.line},
                                                    {q.lo, q.line},
                                                    {q.hi, q.line}})
                                    : sorted_tuple({{p.line, p.lo},
                                                    {p.line, p.hi},
                                                    {q.line, q.lo},
                                                    {q.line, q.hi}});
                    return Witness{cls, std::move(w)};
                }
            }
        }
    }
    return std::nullopt;
}

// -------------------------------------------------------------------- brute

void ensure_brute_guard(const PointSet& ps) {
    if (ps.size() > kBruteGuard) {
        throw BruteGuardExceeded("brute method limited to " + std::to_string(kBruteGuard) +
                                 " points, got " + std::to_string(ps.size()));
    }
}

std::uint64_t brute_count(const PointSet& ps, const ConfigClass& cls) {
    ensure_brute_guard(ps);
    const auto& pts = ps.points();
    const std::size_t n = pts.size();
    const int arity = cls.arity();
    if (n < static_cast<std::size_t>(arity)) return 0;
    return parallel_sum(0, static_cast<std::int64_t>(n), [&](std::int64_t lo, std::int64_t hi) {
        std::uint64_t cnt = 0;
        Point t[4];
        for (std::int64_t i = lo; i < hi; ++i) {
            t[0] = pts[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                t[1] = pts[j];
                for (std::size_t k = j + 1; k < n; ++k) {
                    t[2] = pts[k];
                    if (arity == 3) {
                        if (matches(cls, std::span<const Point>(t, 3))) ++cnt;
                    } else {
                        for (std::size_t l = k + 1; l < n; ++l) {
                            t[3] = pts[l];
                            if (matches(cls, std::span<const Point>(t, 4))) ++cnt;
                        }
                    }
                }
            }
        }
        return cnt;
    });
}

std::vector<Witness> brute_witnesses(const PointSet& ps, const ConfigClass& cls,
                                     std::size_t limit) {
    ensure_brute_guard(ps);
    const auto& pts = ps.points();
    const std::size_t n = pts.size();
    const int arity = cls.arity();
    std::vector<Witness> out;
    if (n < static_cast<std::size_t>(arity)) return out;
    Point t[4];
    for (std::size_t i = 0; i < n && out.size() < limit; ++i) {
        t[0] = pts[i];
        for (std::size_t j = i + 1; j < n && out.size() < limit; ++j) {
            t[1] = pts[j];
            for (std::size_t k = j + 1; k < n && out.size() < limit; ++k) {
                t[2] = pts[k];
                if (arity == 3) {
                    if (matches(cls, std::span<const Point>(t, 3)))
                        out.push_back({cls, {t[0], t[1], t[2]}});
                } else {
                    for (std::size_t l = k + 1; l < n && out.size() < limit; ++l) {
                        t[3] = pts[l];
                        if (matches(cls, std::span<const Point>(t, 4)))
                            out.push_back({cls, {t[0], t[1], t[2], t[3]}});
                    }
                }
            }
        }
    }
    return out;
}

std::uint64_t fast_count(const PointSet& ps, const ConfigClass& cls) {
    switch (cls.kind) {
        case ConfigKind::Collinear:
            return collinear_count(ps, cls.k);
        case ConfigKind::Parallelogram:
            return detail::parallelogram_fast_count(ps, cls.allow_degenerate);
        case ConfigKind::Rhombus:
            return detail::rhombus_fast_count(ps);
        case ConfigKind::AxisKite:
            return axis_kite_count(ps, cls.allow_flat);
        case ConfigKind::AxisSquare:
            return axis_square_count(ps);
        case ConfigKind::Square:
            return square_fast_count(ps);
        case ConfigKind::AxisRectangle:
            return axis_rectangle_count(ps);
        case ConfigKind::IsoscelesTriangle:
            return isosceles_count(ps, cls.allow_flat);
        case ConfigKind::Corner:
            return corner_count(ps);
        case ConfigKind::IsoscelesRightTriangle:
            return iso_right_count(ps);
        case ConfigKind::Concyclic4:
            return concyclic_count(ps);
        case ConfigKind::AxisIsoTrapezoid:
            return trapezoid_count(ps, cls.include_equal_sides);
    }
    return 0;
}

}  // namespace

std::optional<Witness> find_any(const PointSet& ps, const ConfigClass& cls) {
    if (ps.size() < static_cast<std::size_t>(cls.arity())) return std::nullopt;
    switch (cls.kind) {
        case ConfigKind::Collinear:
            return collinear_find(ps, cls);
        case ConfigKind::Parallelogram:
            return detail::find_parallelogram(ps, cls.allow_degenerate);
        case ConfigKind::Rhombus: {
            auto v = detail::enumerate_rhombi(ps, 1);
            if (v.empty()) return std::nullopt;
            return v.front();
        }
        case ConfigKind::AxisKite:
            return axis_kite_find(ps, cls);
        case ConfigKind::AxisSquare:
            return axis_square_find(ps);
        case ConfigKind::Square:
            return square_find(ps);
        case ConfigKind::AxisRectangle:
            return axis_rectangle_find(ps);
        case ConfigKind::IsoscelesTriangle:
            return isosceles_find(ps, cls);
        case ConfigKind::Corner:
            return corner_find(ps);
        case ConfigKind::IsoscelesRightTriangle:
            return iso_right_find(ps);
        case ConfigKind::Concyclic4:
            return concyclic_find(ps);
        case ConfigKind::AxisIsoTrapezoid:
            return trapezoid_find(ps, cls);
    }
    return std::nullopt;
}

VerifyResult verify_free(const PointSet& ps, const ConfigClass& cls) {
    auto w = find_any(ps, cls);
    return {!w.has_value(), std::move(w)};
}

CountReport count_all(const PointSet& ps, const ConfigClass& cls, CountMethod method) {
    const auto t0 = Clock::now();
    CountReport rep;
    rep.cls = cls;
    rep.method = method == CountMethod::Fast ? "fast" : "brute";
    rep.count = method == CountMethod::Fast ? fast_count(ps, cls) : brute_count(ps, cls);
    rep.elapsed = Clock::now() - t0;
    return rep;
}

std::vector<Witness> all_witnesses(const PointSet& ps, const ConfigClass& cls) {
    if (cls.kind == ConfigKind::Rhombus) {
        return detail::enumerate_rhombi(ps, SIZE_MAX);
    }
    return brute_witnesses(ps, cls, SIZE_MAX);
}

}  // namespace gridfree
