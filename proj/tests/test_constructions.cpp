#include <doctest.h>

#include <cmath>
#include <set>
#include <unordered_set>

#include "gridfree/additive.hpp"
#include "gridfree/construct.hpp"
#include "gridfree/detect.hpp"
#include "gridfree/errors.hpp"

using namespace gridfree;

namespace {

// Tilted squares have axis-parallel diagonals: (cx+-d, cy), (cx, cy+-d).
bool has_tilted_square(const PointSet& ps) {
    for (const Point& p : ps.points()) {
        for (const Point& q : ps.points()) {
            if (p.x != q.x || p.y >= q.y) continue;
            if ((p.y + q.y) % 2 != 0) continue;
            const std::int64_t cy = (p.y + q.y) / 2, d = (q.y - p.y) / 2;
            if (ps.contains({p.x - d, cy}) && ps.contains({p.x + d, cy})) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("l_shape sizes and freeness") {
    CHECK(l_shape_nd_para_free(1).points.points() == std::vector<Point>{{1, 1}});
    const Construction c3 = l_shape_nd_para_free(3);
    CHECK(c3.report.final_size == 5);
    CHECK(c3.report.verified);
    const Construction c100 = l_shape_nd_para_free(100);
    CHECK(c100.report.final_size == 199);
    CHECK(c100.report.verified);
}

TEST_CASE("rhombus constructor is deterministic and verified") {
    const Construction a = rhombus_free_random(64, 12345);
    const Construction b = rhombus_free_random(64, 12345);
    CHECK(a.points.points() == b.points.points());
    CHECK(a.report.verified);
    CHECK(a.report.base_size - a.report.deleted == a.report.final_size);
    CHECK(verify_free(a.points, ConfigClass::rhombus()).free);

    const Construction c = rhombus_free_random(64, 999);
    CHECK(c.report.verified);
    // different seed generally gives a different sample
    CHECK(c.points.points() != a.points.points());
}

TEST_CASE("rhombus constructor respects preconditions") {
    CHECK_THROWS_AS(rhombus_free_random(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(rhombus_free_random(8192, 1), GuardExceeded);
}

TEST_CASE("b2 variant reduces to the sidon variant at g=1") {
    const Construction a = rhombus_free_random(40, 7);
    const Construction b = rhombus_free_b2g(40, 1, 7);
    CHECK(a.points.points() == b.points.points());
    const Construction c = rhombus_free_b2g(40, 2, 7);
    CHECK(c.report.verified);
    CHECK(c.report.parameters.count("g") == 1);
    CHECK(c.report.parameters.count("rhombi_in_base") == 1);
}

TEST_CASE("axis kite free product") {
    const Construction c = axis_kite_free(8);
    CHECK(c.points.size() == 16);   // 3-AP-free maximum of size 4, squared
    CHECK(c.report.verified);
    CHECK(verify_free(c.points, ConfigClass::axis_kite(true)).free);
    CHECK_FALSE(has_tilted_square(c.points));

    const Construction c1 = axis_kite_free(1);
    CHECK(c1.points.points() == std::vector<Point>{{1, 1}});

    const Construction c100 = axis_kite_free(100);
    CHECK(c100.report.verified);
    CHECK_FALSE(has_tilted_square(c100.points));
}

TEST_CASE("axis square free embedding") {
    for (std::int64_t n : {4, 16, 33, 64}) {
        const Construction c = axis_square_free(n);
        CHECK(c.report.verified);
        const std::int64_t h = n / 2;
        std::set<std::int64_t> parities;
        for (const Point& p : c.points.points()) {
            CHECK(p.x >= 1);
            CHECK(p.x <= n);
            CHECK(p.y >= 1);
            CHECK(p.y <= n);
            CHECK(p.x >= 2);
            CHECK(p.x <= 2 * h);
            CHECK(p.y <= 2 * h - 1);
            parities.insert((p.x + p.y) % 2);
        }
        CHECK(parities.size() == 1);   // constant coordinate-sum parity
        CHECK(count_all(c.points, ConfigClass::axis_square(), CountMethod::Brute).count == 0);
    }
}

TEST_CASE("square free construction") {
    const Construction c = square_free(50);
    CHECK(c.report.verified);
    CHECK(verify_free(c.points, ConfigClass::square()).free);

    // x-coordinates form a Sidon set
    std::set<std::int64_t> xs;
    for (const Point& p : c.points.points()) xs.insert(p.x);
    std::vector<std::int64_t> xv(xs.begin(), xs.end());
    CHECK(difference_multiplicity({xv, std::nullopt, std::nullopt}) <= 1);

    // averaging bound held (recorded parameters)
    const std::int64_t q = std::stoll(c.report.parameters.at("q"));
    const std::int64_t m = std::stoll(c.report.parameters.at("m"));
    const std::int64_t p1 = std::stoll(c.report.parameters.at("axis_free_base"));
    CHECK(static_cast<std::int64_t>(c.points.size()) * m >= p1 * (q + 1));

    CHECK_THROWS_AS(square_free(5), NoPrimePowerInRange);
}

TEST_CASE("rectangle free meets the sharp bound at plane orders") {
    const Construction c7 = rectangle_free(7);
    CHECK(c7.report.final_size == 21);
    CHECK(c7.report.verified);
    const Construction c13 = rectangle_free(13);
    CHECK(c13.report.final_size == 52);
    CHECK(c13.report.verified);
    for (const Construction& c : {c7, c13}) {
        const std::int64_t n = c.report.n;
        const auto bound = static_cast<std::int64_t>(
            std::floor(n / 2.0 * (1.0 + std::sqrt(4.0 * n - 3.0))));
        CHECK(c.report.final_size == bound);
    }
}

TEST_CASE("rectangle free below the first plane order trims q=2") {
    for (std::int64_t n : {3, 4, 5, 6}) {
        const Construction c = rectangle_free(n);
        CHECK(c.report.verified);
        CHECK(c.points.size() >= static_cast<std::size_t>(n));
        for (const Point& p : c.points.points()) {
            CHECK(p.x <= n);
            CHECK(p.y <= n);
        }
    }
}

TEST_CASE("parity partition") {
    std::vector<Point> grid;
    for (std::int64_t x = 1; x <= 2; ++x)
        for (std::int64_t y = 1; y <= 2; ++y) grid.push_back({x, y});
    const PointSet ps(grid, GridSpec{2});
    const auto [even, odd] = parity_partition(ps);
    CHECK(even.size() == 2);
    CHECK(odd.size() == 2);
    for (const Point& p : even) CHECK((p.x + p.y) % 2 == 0);
    for (const Point& p : odd) CHECK((p.x + p.y) % 2 == 1);
    CHECK(even.size() + odd.size() == ps.size());
    for (const Point& p : ps) CHECK((even.contains(p) || odd.contains(p)));
}

TEST_CASE("parity parts rescale into an n x n window") {
    const std::int64_t n = 9;
    std::vector<Point> grid;
    for (std::int64_t x = 1; x <= n; ++x)
        for (std::int64_t y = 1; y <= n; ++y) grid.push_back({x, y});
    const auto [even, odd] = parity_partition(PointSet(grid, GridSpec{n}));
    for (const PointSet* part : {&even, &odd}) {
        // rotate a diagonal sublattice back to axis-aligned coordinates
        std::set<Point> image;
        std::int64_t min_u = 1 << 30, max_u = -(1 << 30);
        std::int64_t min_v = 1 << 30, max_v = -(1 << 30);
        const std::int64_t c = (part->points().front().x + part->points().front().y) % 2;
        for (const Point& p : part->points()) {
            const std::int64_t u = (p.x + p.y - c) / 2;
            const std::int64_t v = (p.x - p.y - c + 1000) / 1;   // keep exact differences
            image.insert({u, v});
            min_u = std::min(min_u, u);
            max_u = std::max(max_u, u);
            min_v = std::min(min_v, v);
            max_v = std::max(max_v, v);
        }
        CHECK(image.size() == part->size());          // injective
        CHECK(max_u - min_u <= n - 1);                // fits an n-wide window
        CHECK((max_v - min_v) / 2 <= n - 1);          // v tracked at double scale
    }
}

TEST_CASE("construction reports account for sizes") {
    const Construction c = rhombus_free_random(100, 3);
    CHECK(c.report.base_size - c.report.deleted == c.report.final_size);
    CHECK(static_cast<std::int64_t>(c.points.size()) == c.report.final_size);
    CHECK(c.report.seed == 3);
}
