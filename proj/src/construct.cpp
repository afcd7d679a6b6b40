#include "gridfree/construct.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "gridfree/additive.hpp"
#include "gridfree/detect.hpp"
#include "gridfree/errors.hpp"
#include "midpoint.hpp"

namespace gridfree {

namespace {

using Clock = std::chrono::steady_clock;

void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// Verifies and fills the common report tail.
void finish(Construction& c, const ConfigClass& target, bool run_verification,
            Clock::time_point t0) {
    if (run_verification) {
        const VerifyResult v = verify_free(c.points, target);
        require(v.free, "construction failed freeness verification");
        c.report.verified = true;
    } else {
        c.report.verified = false;
    }
    c.report.final_size = static_cast<std::int64_t>(c.points.size());
    c.report.elapsed = Clock::now() - t0;
}

struct AlterationOutcome {
    std::vector<Point> kept;
    std::int64_t sampled = 0;
    std::int64_t deleted = 0;
    std::uint64_t rhombi_in_base = 0;
    double sampling_p = 1.0;
};

// Shared by both rhombus constructors: count rhombi in [1,n] x S, sample
// with the maximizer of p|B| - p^4 R, then greedily delete the point lying
// in the most surviving rhombi until none remain.
AlterationOutcome rhombus_alteration(std::int64_t n, const ResidueSet& rows,
                                     std::uint64_t seed) {
    AlterationOutcome out;
    std::vector<Point> base;
    base.reserve(static_cast<std::size_t>(n) * rows.elements.size());
    for (std::int64_t x = 1; x <= n; ++x) {
        for (std::int64_t y : rows.elements) base.push_back({x, y});
    }
    const PointSet base_set(base, GridSpec{n});
    require(base_set.size() == base.size(), "product base had duplicates");

    out.rhombi_in_base = detail::rhombus_fast_count(base_set);
    const double b = static_cast<double>(base.size());
    out.sampling_p = out.rhombi_in_base == 0
                         ? 1.0
                         : std::min(1.0, std::cbrt(b / (4.0 * static_cast<double>(out.rhombi_in_base))));

    std::vector<Point> kept;
    if (out.sampling_p >= 1.0) {
        kept = base_set.points();
    } else {
        const auto threshold = static_cast<std::uint64_t>(
            static_cast<long double>(out.sampling_p) * 18446744073709551616.0L);
        SplitMix64 rng(seed);
        for (const Point& p : base_set.points()) {   // one draw per point, canonical order
            if (rng.next() < threshold) kept.push_back(p);
        }
    }
    out.sampled = static_cast<std::int64_t>(kept.size());

    PointSet sampled(kept, GridSpec{n});
    std::vector<Witness> rhombi = detail::enumerate_rhombi(sampled, SIZE_MAX);
    std::vector<bool> alive(rhombi.size(), true);
    std::size_t alive_count = rhombi.size();
    std::unordered_set<Point, PointHash> removed;

    while (alive_count > 0) {
        std::unordered_map<Point, std::uint32_t, PointHash> degree;
        for (std::size_t i = 0; i < rhombi.size(); ++i) {
            if (!alive[i]) continue;
            for (const Point& p : rhombi[i].pts) ++degree[p];
        }
        Point victim{};
        std::uint32_t best = 0;
        bool have = false;
        for (const auto& [p, d] : degree) {
            if (d > best || (d == best && have && p < victim)) {
                best = d;
                victim = p;
                have = true;
            } else if (!have) {
                best = d;
                victim = p;
                have = true;
            }
        }
        removed.insert(victim);
        for (std::size_t i = 0; i < rhombi.size(); ++i) {
            if (!alive[i]) continue;
            for (const Point& p : rhombi[i].pts) {
                if (p == victim) {
                    alive[i] = false;
                    --alive_count;
                    break;
                }
            }
        }
    }
    out.deleted = static_cast<std::int64_t>(removed.size());
    out.kept.reserve(kept.size() - removed.size());
    for (const Point& p : sampled.points()) {
        if (!removed.count(p)) out.kept.push_back(p);
    }
    return out;
}

Construction rhombus_free_common(const char* name, std::int64_t n, std::int64_t g,
                                 std::uint64_t seed, std::int64_t n_guard) {
    if (n < 7) throw std::invalid_argument("rhombus construction requires n >= 7");
    if (n > n_guard) {
        throw GuardExceeded("rhombus construction limited to n <= " + std::to_string(n_guard) +
                            " (full base enumeration)");
    }
    const auto t0 = Clock::now();
    const ResidueSet rows = g == 1 ? sidon_in_interval(n) : b2_minus_g_set(n, g);
    AlterationOutcome alt = rhombus_alteration(n, rows, seed);

    Construction c;
    c.points = PointSet(std::move(alt.kept), GridSpec{n});
    c.report.name = name;
    c.report.n = n;
    c.report.seed = seed;
    c.report.base_size = alt.sampled;
    c.report.deleted = alt.deleted;
    c.report.parameters["rows"] = std::to_string(rows.elements.size());
    c.report.parameters["product_size"] =
        std::to_string(static_cast<std::int64_t>(n) * static_cast<std::int64_t>(rows.elements.size()));
    c.report.parameters["rhombi_in_base"] = std::to_string(alt.rhombi_in_base);
    c.report.parameters["sampling_p"] = format_double(alt.sampling_p);
    if (g != 1) {
        c.report.parameters["g"] = std::to_string(g);
        c.report.parameters["achieved_multiplicity"] =
            std::to_string(rows.claimed_g.value_or(1));
    }
    finish(c, ConfigClass::rhombus(), true, t0);
    return c;
}

}  // namespace

Construction l_shape_nd_para_free(std::int64_t n, std::int64_t verify_guard) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const auto t0 = Clock::now();
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(2 * n));
    for (std::int64_t x = 1; x <= n; ++x) pts.push_back({x, 1});
    for (std::int64_t y = 2; y <= n; ++y) pts.push_back({1, y});

    Construction c;
    c.points = PointSet(std::move(pts), GridSpec{n});
    c.report.name = "l_shape_nd_para_free";
    c.report.n = n;
    c.report.base_size = static_cast<std::int64_t>(c.points.size());
    require(c.report.base_size == 2 * n - 1, "L-shape has wrong size");
    finish(c, ConfigClass::parallelogram(false),
           c.report.base_size <= verify_guard, t0);
    return c;
}

Construction rhombus_free_random(std::int64_t n, std::uint64_t seed, std::int64_t n_guard) {
    return rhombus_free_common("rhombus_free_random", n, 1, seed, n_guard);
}

Construction rhombus_free_b2g(std::int64_t n, std::int64_t g, std::uint64_t seed,
                              std::int64_t n_guard) {
    if (g < 1) throw std::invalid_argument("g must be positive");
    return rhombus_free_common("rhombus_free_b2g", n, g, seed, n_guard);
}

Construction axis_kite_free(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const auto t0 = Clock::now();
    const ResidueSet s = behrend_set(n);
    std::vector<Point> pts;
    pts.reserve(s.elements.size() * s.elements.size());
    for (std::int64_t x : s.elements) {
        for (std::int64_t y : s.elements) pts.push_back({x, y});
    }
    Construction c;
    c.points = PointSet(std::move(pts), GridSpec{n});
    c.report.name = "axis_kite_free";
    c.report.n = n;
    c.report.base_size = static_cast<std::int64_t>(c.points.size());
    c.report.parameters["ap_free_size"] = std::to_string(s.elements.size());
    finish(c, ConfigClass::axis_kite(true), true, t0);
    return c;
}

Construction axis_square_free(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    const auto t0 = Clock::now();
    const std::int64_t h = n / 2;
    const ResidueSet s = behrend_set(h);
    // Rotate the kite-free product by 45 degrees: (u,v) -> (u+v, u-v+h)
    // lands in [2,2h] x [1,2h-1] inside [1,n]^2.
    std::vector<Point> pts;
    pts.reserve(s.elements.size() * s.elements.size());
    for (std::int64_t u : s.elements) {
        for (std::int64_t v : s.elements) pts.push_back({u + v, u - v + h});
    }
    Construction c;
    c.points = PointSet(std::move(pts), GridSpec{n});
    require(c.points.size() == s.elements.size() * s.elements.size(),
            "rotated embedding collapsed points");
    c.report.name = "axis_square_free";
    c.report.n = n;
    c.report.base_size = static_cast<std::int64_t>(c.points.size());
    c.report.parameters["ap_free_size"] = std::to_string(s.elements.size());
    c.report.parameters["half_grid"] = std::to_string(h);
    finish(c, ConfigClass::axis_square(), true, t0);
    return c;
}

Construction square_free(std::int64_t n, std::size_t verify_guard) {
    if (n < 7) throw NoPrimePowerInRange("square-free construction requires n >= 7");
    const auto t0 = Clock::now();
    const auto q_opt = largest_singer_q(n);
    if (!q_opt) throw NoPrimePowerInRange("no prime power q with q^2+q+1 <= n");
    const std::int64_t q = *q_opt, m = q * q + q + 1;

    const Construction base = axis_square_free(m);
    const ResidueSet d = singer_difference_set(q);

    // score[t] = points of the base whose column lies in the lifted
    // translate D+t; each column belongs to exactly q+1 translates.
    std::vector<std::int64_t> score(static_cast<std::size_t>(m), 0);
    for (const Point& p : base.points.points()) {
        for (std::int64_t dd : d.elements) {
            const std::int64_t t = (((p.x - 1) - dd) % m + m) % m;
            ++score[t];
        }
    }
    std::int64_t best_t = 0;
    for (std::int64_t t = 1; t < m; ++t) {
        if (score[t] > score[best_t]) best_t = t;
    }

    std::unordered_set<std::int64_t> columns;
    for (std::int64_t dd : d.elements) columns.insert((dd + best_t) % m + 1);
    std::vector<Point> pts;
    for (const Point& p : base.points.points()) {
        if (columns.count(p.x)) pts.push_back(p);
    }

    Construction c;
    c.points = PointSet(std::move(pts), GridSpec{n});
    c.report.name = "square_free";
    c.report.n = n;
    c.report.base_size = static_cast<std::int64_t>(c.points.size());
    c.report.parameters["q"] = std::to_string(q);
    c.report.parameters["m"] = std::to_string(m);
    c.report.parameters["m_over_n"] = format_double(static_cast<double>(m) / static_cast<double>(n));
    c.report.parameters["half_window_hit"] = 2 * m > n ? "true" : "false";
    c.report.parameters["translate"] = std::to_string(best_t);
    c.report.parameters["axis_free_base"] = std::to_string(base.points.size());
    c.report.parameters["averaging_bound"] =
        std::to_string((static_cast<std::int64_t>(base.points.size()) * (q + 1) + m - 1) / m);
    require(static_cast<std::int64_t>(c.points.size()) * m >=
                static_cast<std::int64_t>(base.points.size()) * (q + 1),
            "translate selection fell below the averaging bound");
    finish(c, ConfigClass::square(), c.points.size() <= verify_guard, t0);
    return c;
}

Construction rectangle_free(std::int64_t n, std::int64_t verify_q_guard) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    const auto t0 = Clock::now();
    const auto q_opt = largest_singer_q(n);
    // Below n = 7 no plane exists; trim the q = 2 incidence set to [n]^2
    // (freeness survives taking subsets).
    const std::int64_t q = q_opt.value_or(2);
    const std::int64_t m = q * q + q + 1;
    const bool trimmed = m > n;
    const ResidueSet d = singer_difference_set(q);
    std::unordered_set<std::int64_t> in_d(d.elements.begin(), d.elements.end());

    const std::int64_t side = std::min(n, m);
    std::vector<Point> pts;
    for (std::int64_t i = 0; i < m; ++i) {
        if (i + 1 > side) break;
        for (std::int64_t j = 0; j < m; ++j) {
            if (j + 1 > side) break;
            if (in_d.count((i + j) % m)) pts.push_back({i + 1, j + 1});
        }
    }
    Construction c;
    c.points = PointSet(std::move(pts), GridSpec{n});
    c.report.name = "rectangle_free";
    c.report.n = n;
    c.report.base_size = static_cast<std::int64_t>(c.points.size());
    c.report.parameters["q"] = std::to_string(q);
    c.report.parameters["m"] = std::to_string(m);
    if (trimmed) c.report.parameters["trimmed"] = "true";
    if (!trimmed) {
        require(static_cast<std::int64_t>(c.points.size()) == (q + 1) * m,
                "incidence set has wrong size");
    }
    finish(c, ConfigClass::axis_rectangle(), q <= verify_q_guard, t0);
    return c;
}

std::pair<PointSet, PointSet> parity_partition(const PointSet& ps) {
    std::vector<Point> even, odd;
    for (const Point& p : ps.points()) {
        (((p.x + p.y) % 2 + 2) % 2 == 0 ? even : odd).push_back(p);
    }
    return {PointSet(std::move(even), ps.bound()), PointSet(std::move(odd), ps.bound())};
}

}  // namespace gridfree
