#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace gridfree {

/// A lattice point. Grid coordinates are 1-based; all predicate arithmetic
/// stays exact in 64-bit for coordinates up to 2^20.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

constexpr std::int64_t dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr std::int64_t cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

/// Squared Euclidean distance.
constexpr std::int64_t dist2(Point a, Point b) {
    const std::int64_t dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        std::uint64_t z = static_cast<std::uint64_t>(p.x) * 0x9e3779b97f4a7c15ULL
                        ^ (static_cast<std::uint64_t>(p.y) + 0xbf58476d1ce4e5b9ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return static_cast<std::size_t>(z ^ (z >> 31));
    }
};

/// The n x n grid [1,n]^2.
struct GridSpec {
    std::int64_t n = 1;

    bool contains(Point p) const {
        return 1 <= p.x && p.x <= n && 1 <= p.y && p.y <= n;
    }
};

/// Immutable finite set of distinct points, iterated in lexicographic
/// (x, y) order, with expected-constant-time membership.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts, std::optional<GridSpec> bound = std::nullopt);

    const std::vector<Point>& points() const { return pts_; }
    bool contains(Point p) const { return index_.count(p) != 0; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::optional<GridSpec>& bound() const { return bound_; }

    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

private:
    std::vector<Point> pts_;                        // sorted, unique
    std::unordered_set<Point, PointHash> index_;
    std::optional<GridSpec> bound_;
};

/// Points of ps in canonical (lexicographic) order.
std::vector<Point> canonical_order(const PointSet& ps);

enum class ConfigKind {
    Collinear,               // k points on a line, k in {3,4}
    Parallelogram,           // equal pairwise sums; degenerate flag
    Rhombus,
    AxisKite,                // axis-parallel diagonals; flat flag
    AxisSquare,
    Square,
    AxisRectangle,
    IsoscelesTriangle,       // flat flag
    Corner,                  // axis-parallel isosceles right triangle
    IsoscelesRightTriangle,
    Concyclic4,              // collinear quadruples count as concyclic
    AxisIsoTrapezoid,        // axis-parallel parallel sides; equal-sides flag
};

/// A forbidden-configuration class plus its degeneracy flags.
struct ConfigClass {
    ConfigKind kind = ConfigKind::Collinear;
    int k = 3;                        // Collinear only
    bool allow_degenerate = true;     // Parallelogram
    bool allow_flat = true;           // AxisKite, IsoscelesTriangle
    bool include_equal_sides = false; // AxisIsoTrapezoid

    int arity() const;
    std::string name() const;

    static ConfigClass collinear(int k);
    static ConfigClass parallelogram(bool allow_degenerate = true);
    static ConfigClass rhombus();
    static ConfigClass axis_kite(bool allow_flat = true);
    static ConfigClass axis_square();
    static ConfigClass square();
    static ConfigClass axis_rectangle();
    static ConfigClass isosceles(bool allow_flat = true);
    static ConfigClass corner();
    static ConfigClass iso_right();
    static ConfigClass concyclic4();
    static ConfigClass axis_iso_trapezoid(bool include_equal_sides = false);

    /// Parses the CLI spelling ("rhombus", "nd-parallelogram", "3-collinear", ...).
    static std::optional<ConfigClass> parse(const std::string& name);
    /// All distinct classes with their flag variants, for exhaustive testing.
    static std::vector<ConfigClass> all_variants();

    friend bool operator==(const ConfigClass&, const ConfigClass&) = default;
};

/// A concrete tuple realizing a configuration; certificate for verification output.
struct Witness {
    ConfigClass cls;
    std::vector<Point> pts;   // arity() points, pairwise distinct
};

}  // namespace gridfree
