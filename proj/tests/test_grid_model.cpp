#include <doctest.h>

#include <stdexcept>

#include "gridfree/grid.hpp"

using namespace gridfree;

TEST_CASE("canonical order is lexicographic") {
    PointSet ps({{2, 1}, {1, 2}, {1, 1}});
    CHECK(canonical_order(ps) == std::vector<Point>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(canonical_order(PointSet(std::vector<Point>{})).empty());
    CHECK(canonical_order(PointSet({{5, 5}})) == std::vector<Point>{{5, 5}});
}

TEST_CASE("duplicates collapse to distinct points") {
    PointSet ps({{1, 1}, {1, 1}, {2, 2}, {2, 2}, {2, 2}, {3, 1}});
    CHECK(ps.size() == 3);
}

TEST_CASE("membership is consistent with iteration") {
    PointSet ps({{3, 4}, {1, 1}, {2, 9}});
    std::size_t seen = 0;
    for (const Point& p : ps) {
        CHECK(ps.contains(p));
        ++seen;
    }
    CHECK(seen == ps.size());
    CHECK_FALSE(ps.contains({9, 9}));
}

TEST_CASE("grid bound is enforced") {
    CHECK_NOTHROW(PointSet({{1, 1}, {4, 4}}, GridSpec{4}));
    CHECK_THROWS_AS(PointSet({{0, 1}}, GridSpec{4}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet({{1, 5}}, GridSpec{4}), std::invalid_argument);
}

TEST_CASE("grid membership test") {
    GridSpec g{3};
    CHECK(g.contains({1, 1}));
    CHECK(g.contains({3, 3}));
    CHECK_FALSE(g.contains({0, 2}));
    CHECK_FALSE(g.contains({2, 4}));
}

TEST_CASE("config class arity and flags") {
    CHECK(ConfigClass::collinear(3).arity() == 3);
    CHECK(ConfigClass::collinear(4).arity() == 4);
    CHECK(ConfigClass::corner().arity() == 3);
    CHECK(ConfigClass::isosceles().arity() == 3);
    CHECK(ConfigClass::iso_right().arity() == 3);
    CHECK(ConfigClass::rhombus().arity() == 4);
    CHECK(ConfigClass::axis_iso_trapezoid().arity() == 4);

    // flag defaults
    CHECK(ConfigClass::parallelogram().allow_degenerate);
    CHECK(ConfigClass::axis_kite().allow_flat);
    CHECK(ConfigClass::isosceles().allow_flat);
    CHECK_FALSE(ConfigClass::axis_iso_trapezoid().include_equal_sides);

    CHECK_THROWS_AS(ConfigClass::collinear(5), std::invalid_argument);
}

TEST_CASE("config class names parse back") {
    for (const ConfigClass& c : ConfigClass::all_variants()) {
        const auto parsed = ConfigClass::parse(c.name());
        REQUIRE(parsed.has_value());
        CHECK(*parsed == c);
    }
    CHECK_FALSE(ConfigClass::parse("no-such-class").has_value());
}
