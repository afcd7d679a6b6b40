#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "gridfree/additive.hpp"
#include "gridfree/detect.hpp"
#include "gridfree/errors.hpp"
#include "gridfree/predicates.hpp"
#include "oracles.hpp"

using namespace gridfree;

namespace {

PointSet random_set(std::mt19937_64& rng, std::size_t size, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> coord(1, hi);
    std::vector<Point> pts;
    while (pts.size() < size) {
        pts.push_back({coord(rng), coord(rng)});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }
    return PointSet(std::move(pts));
}

PointSet l_shape(std::int64_t n) {
    std::vector<Point> pts;
    for (std::int64_t x = 1; x <= n; ++x) pts.push_back({x, 1});
    for (std::int64_t y = 2; y <= n; ++y) pts.push_back({1, y});
    return PointSet(std::move(pts), GridSpec{n});
}

PointSet full_grid(std::int64_t n) {
    std::vector<Point> pts;
    for (std::int64_t x = 1; x <= n; ++x)
        for (std::int64_t y = 1; y <= n; ++y) pts.push_back({x, y});
    return PointSet(std::move(pts), GridSpec{n});
}

}  // namespace

TEST_CASE("find_any examples") {
    // L-shape avoids nondegenerate parallelograms
    CHECK_FALSE(find_any(l_shape(4), ConfigClass::parallelogram(false)).has_value());

    const auto w = find_any(full_grid(2), ConfigClass::axis_square());
    REQUIRE(w.has_value());
    CHECK(w->pts == std::vector<Point>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});

    const PointSet rh({{0, 0}, {5, 0}, {8, 4}, {3, 4}});
    const auto wr = find_any(rh, ConfigClass::rhombus());
    REQUIRE(wr.has_value());
    CHECK(wr->pts == std::vector<Point>{{0, 0}, {3, 4}, {5, 0}, {8, 4}});
}

TEST_CASE("verify_free mirrors find_any") {
    CHECK(verify_free(l_shape(4), ConfigClass::parallelogram(false)).free);
    const auto res = verify_free(full_grid(2), ConfigClass::axis_square());
    CHECK_FALSE(res.free);
    REQUIRE(res.witness.has_value());
    CHECK(matches(res.witness->cls, std::span<const Point>(res.witness->pts.data(), 4)));
}

TEST_CASE("count_all examples") {
    CHECK(count_all(full_grid(2), ConfigClass::parallelogram(true), CountMethod::Brute).count == 1);
    CHECK(count_all(full_grid(2), ConfigClass::parallelogram(true), CountMethod::Fast).count == 1);

    // product of a column range with a Sidon set
    std::vector<Point> pts;
    for (std::int64_t x = 1; x <= 8; ++x)
        for (std::int64_t y : {1, 2, 5, 7}) pts.push_back({x, y});
    const PointSet prod(std::move(pts));
    const auto fast = count_all(prod, ConfigClass::rhombus(), CountMethod::Fast);
    const auto brute = count_all(prod, ConfigClass::rhombus(), CountMethod::Brute);
    CHECK(fast.count == brute.count);
    CHECK(fast.method == "fast");
    CHECK(brute.method == "brute");
}

TEST_CASE("brute guard") {
    std::vector<Point> pts;
    for (std::int64_t x = 1; x <= 46; ++x)
        for (std::int64_t y = 1; y <= 46; ++y) pts.push_back({x, y});
    const PointSet big(std::move(pts));   // 2116 > 2000
    CHECK_THROWS_AS(count_all(big, ConfigClass::corner(), CountMethod::Brute),
                    BruteGuardExceeded);
}

TEST_CASE("concyclic fast guard") {
    std::vector<Point> pts;
    for (std::int64_t x = 1; x <= 18; ++x)
        for (std::int64_t y = 1; y <= 18; ++y) pts.push_back({x, y});
    const PointSet big(std::move(pts));   // 324 > 300
    CHECK_THROWS_AS(count_all(big, ConfigClass::concyclic4(), CountMethod::Fast),
                    GuardExceeded);
}

TEST_CASE("fast equals brute on random sets for every class") {
    std::mt19937_64 rng(123456);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> size_dist(8, 60);
        const PointSet ps = random_set(rng, size_dist(rng), 30);
        for (const ConfigClass& cls : ConfigClass::all_variants()) {
            const auto fast = count_all(ps, cls, CountMethod::Fast);
            const auto brute = count_all(ps, cls, CountMethod::Brute);
            if (fast.count != brute.count) {
                CAPTURE(cls.name());
                CAPTURE(trial);
                CAPTURE(ps.size());
            }
            REQUIRE(fast.count == brute.count);
        }
    }
}

TEST_CASE("fast equals brute on full grids") {
    // dense structured input: stresses the double-counting corrections
    // (axis-diagonal rhombi inside the kite counter, rectangles inside the
    // trapezoid counter)
    for (std::int64_t n : {2, 3, 4, 5}) {
        const PointSet g = full_grid(n);
        for (const ConfigClass& cls : ConfigClass::all_variants()) {
            const auto fast = count_all(g, cls, CountMethod::Fast);
            const auto brute = count_all(g, cls, CountMethod::Brute);
            if (fast.count != brute.count) {
                CAPTURE(cls.name());
                CAPTURE(n);
            }
            REQUIRE(fast.count == brute.count);
        }
    }
}

TEST_CASE("fast equals brute on symmetric cross patterns") {
    // hand-made sets rich in flat kites and diamonds
    const PointSet diamond({{5, 3}, {5, 7}, {3, 5}, {7, 5}, {5, 5}, {1, 5}, {9, 5}, {5, 1}});
    const PointSet flat({{1, 4}, {3, 4}, {5, 4}, {7, 4}, {4, 1}, {4, 4}, {4, 7}, {2, 4}, {6, 4}});
    for (const PointSet* ps : {&diamond, &flat}) {
        for (const ConfigClass& cls : ConfigClass::all_variants()) {
            CHECK(count_all(*ps, cls, CountMethod::Fast).count ==
                  count_all(*ps, cls, CountMethod::Brute).count);
        }
    }
}

TEST_CASE("find_any agrees with count positivity") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        const PointSet ps = random_set(rng, 25, 12);
        for (const ConfigClass& cls : ConfigClass::all_variants()) {
            const bool found = find_any(ps, cls).has_value();
            const bool positive = count_all(ps, cls, CountMethod::Brute).count > 0;
            CHECK(found == positive);
            const auto w = find_any(ps, cls);
            if (w) {
                CHECK(matches(cls, std::span<const Point>(w->pts.data(), w->pts.size())));
                for (const Point& p : w->pts) CHECK(ps.contains(p));
            }
        }
    }
}

TEST_CASE("adding a point never decreases a count") {
    std::mt19937_64 rng(3141);
    for (int trial = 0; trial < 10; ++trial) {
        const PointSet ps = random_set(rng, 20, 10);
        std::uniform_int_distribution<std::int64_t> coord(1, 10);
        Point extra{coord(rng), coord(rng)};
        while (ps.contains(extra)) extra = {coord(rng), coord(rng)};
        std::vector<Point> bigger = ps.points();
        bigger.push_back(extra);
        const PointSet ps2(std::move(bigger));
        for (const ConfigClass& cls : ConfigClass::all_variants()) {
            CHECK(count_all(ps2, cls, CountMethod::Brute).count >=
                  count_all(ps, cls, CountMethod::Brute).count);
        }
    }
}

TEST_CASE("parallelogram freeness is two-dimensional Sidon") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 120; ++trial) {
        std::uniform_int_distribution<std::size_t> size_dist(5, 40);
        const PointSet ps = random_set(rng, size_dist(rng), 20);
        // independent check: all pairwise sums of distinct pairs distinct
        std::set<std::pair<std::int64_t, std::int64_t>> sums;
        bool sidon = true;
        const auto& pts = ps.points();
        for (std::size_t i = 0; i < pts.size() && sidon; ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                if (!sums.insert({pts[i].x + pts[j].x, pts[i].y + pts[j].y}).second) {
                    sidon = false;
                    break;
                }
            }
        }
        CHECK(verify_free(ps, ConfigClass::parallelogram(true)).free == sidon);
    }
}

TEST_CASE("rhombi in a Sidon product have two horizontal sides") {
    const ResidueSet s = sidon_in_interval(40);
    std::vector<Point> pts;
    for (std::int64_t x = 1; x <= 40; ++x)
        for (std::int64_t y : s.elements) pts.push_back({x, y});
    const PointSet prod(std::move(pts));
    const auto rhombi = all_witnesses(prod, ConfigClass::rhombus());
    CHECK(rhombi.size() == count_all(prod, ConfigClass::rhombus(), CountMethod::Fast).count);
    for (const Witness& w : rhombi) {
        std::map<std::int64_t, int> rows;
        for (const Point& p : w.pts) ++rows[p.y];
        // two rows with two points each
        REQUIRE(rows.size() == 2);
        for (const auto& [y, c] : rows) CHECK(c == 2);
    }
}

TEST_CASE("counts are independent of the worker count") {
    std::mt19937_64 rng(565656);
    const PointSet ps = random_set(rng, 60, 25);
    std::vector<std::pair<ConfigClass, std::uint64_t>> expected;
    setenv("GRIDFREE_THREADS", "1", 1);
    for (const ConfigClass& cls : ConfigClass::all_variants()) {
        expected.emplace_back(cls, count_all(ps, cls, CountMethod::Fast).count);
        expected.emplace_back(cls, count_all(ps, cls, CountMethod::Brute).count);
    }
    setenv("GRIDFREE_THREADS", "7", 1);
    std::size_t at = 0;
    for (const ConfigClass& cls : ConfigClass::all_variants()) {
        CHECK(count_all(ps, cls, CountMethod::Fast).count == expected[at++].second);
        CHECK(count_all(ps, cls, CountMethod::Brute).count == expected[at++].second);
    }
    unsetenv("GRIDFREE_THREADS");
}

TEST_CASE("pythagorean pairs examples") {
    const auto r5 = pythagorean_pairs(5);
    CHECK(r5.count == 2);
    REQUIRE(r5.pairs.size() == 2);
    CHECK(r5.pairs[0].a == 3);
    CHECK(r5.pairs[0].b == 4);
    CHECK(r5.pairs[1].a == 4);
    CHECK(r5.pairs[1].b == 3);

    CHECK(pythagorean_pairs(4).count == 0);
    CHECK(pythagorean_count(1) == 0);

    // n = 13, frozen from the brute-force oracle
    CHECK(pythagorean_count_brute(13) == 8);
    CHECK(pythagorean_count(13) == 8);
    const auto r13 = pythagorean_pairs(13);
    const std::set<std::pair<std::int64_t, std::int64_t>> expect{
        {3, 4}, {4, 3}, {6, 8}, {8, 6}, {5, 12}, {12, 5}, {9, 12}, {12, 9}};
    std::set<std::pair<std::int64_t, std::int64_t>> got;
    for (const auto& p : r13.pairs) {
        got.insert({p.a, p.b});
        CHECK(p.a * p.a + p.b * p.b == p.c * p.c);
    }
    CHECK(got == expect);
}

TEST_CASE("pythagorean fast matches brute and is symmetric") {
    for (std::int64_t n : {1, 2, 5, 13, 50, 101, 200}) {
        CHECK(pythagorean_count(n) == pythagorean_count_brute(n));
        CHECK(pythagorean_count(n) % 2 == 0);
    }
    std::uint64_t prev = 0;
    for (std::int64_t n = 1; n <= 120; ++n) {
        const std::uint64_t c = pythagorean_count(n);
        CHECK(c >= prev);
        prev = c;
    }
}
