#include "gridfree/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

#include "gridfree/detect.hpp"
#include "gridfree/errors.hpp"
#include "gridfree/predicates.hpp"

namespace gridfree {

namespace {

using Clock = std::chrono::steady_clock;

Point apply_symmetry(Point p, std::int64_t n, unsigned sym) {
    const std::int64_t x = p.x, y = p.y, r = n + 1;
    switch (sym & 7u) {
        case 0: return {x, y};
        case 1: return {r - x, y};
        case 2: return {x, r - y};
        case 3: return {r - x, r - y};
        case 4: return {y, x};
        case 5: return {r - y, x};
        case 6: return {y, r - x};
        case 7: return {r - y, r - x};
    }
    return p;
}

std::vector<Point> grid_points(std::int64_t n) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    for (std::int64_t x = 1; x <= n; ++x)
        for (std::int64_t y = 1; y <= n; ++y) pts.push_back({x, y});
    return pts;
}

}  // namespace

std::vector<Witness> enumerate_forbidden(std::int64_t n, const ConfigClass& cls) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const int arity = cls.arity();
    const std::int64_t guard = arity == 3 ? kEnumGuardArity3 : kEnumGuardArity4;
    if (n > guard) {
        throw GuardExceeded("enumeration of " + cls.name() + " tuples limited to n <= " +
                            std::to_string(guard));
    }
    const std::vector<Point> pts = grid_points(n);
    const std::size_t v = pts.size();
    std::vector<Witness> out;
    Point t[4];
    for (std::size_t i = 0; i < v; ++i) {
        t[0] = pts[i];
        for (std::size_t j = i + 1; j < v; ++j) {
            t[1] = pts[j];
            for (std::size_t k = j + 1; k < v; ++k) {
                t[2] = pts[k];
                if (arity == 3) {
                    if (matches(cls, std::span<const Point>(t, 3)))
                        out.push_back({cls, {t[0], t[1], t[2]}});
                } else {
                    for (std::size_t l = k + 1; l < v; ++l) {
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

SearchResult max_free_subset_exact(std::int64_t n, const ConfigClass& cls,
                                   std::uint64_t node_budget, unsigned symmetry_id) {
    const auto t0 = Clock::now();
    const std::vector<Witness> forbidden = enumerate_forbidden(n, cls);
    const std::vector<Point> pts = grid_points(n);
    const int v = static_cast<int>(pts.size());

    std::unordered_map<Point, int, PointHash> index;
    for (int i = 0; i < v; ++i) index.emplace(pts[i], i);

    // Hyperedges as vertex-index lists plus per-vertex incidence.
    std::vector<std::vector<int>> edges(forbidden.size());
    std::vector<std::vector<int>> incident(v);
    for (std::size_t e = 0; e < forbidden.size(); ++e) {
        for (const Point& p : forbidden[e].pts) {
            const int vi = index.at(p);
            edges[e].push_back(vi);
            incident[vi].push_back(static_cast<int>(e));
        }
    }

    // Branch order: descending edge-degree, ties by the (symmetry-permuted)
    // lexicographic point order. The hypergraph itself is unchanged.
    std::vector<int> order(v);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Point> sym_key(v);
    for (int i = 0; i < v; ++i) sym_key[i] = apply_symmetry(pts[i], n, symmetry_id);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (incident[a].size() != incident[b].size())
            return incident[a].size() > incident[b].size();
        return sym_key[a] < sym_key[b];
    });

    std::vector<int> chosen_cnt(edges.size(), 0);
    std::vector<int> saturated(v, 0);   // incident edges one vertex away from complete
    std::vector<char> in_chosen(v, 0);
    std::vector<int> chosen;
    std::vector<int> best_set;
    std::int64_t best = -1;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    auto adjust_edges = [&](int vi, int delta) {
        for (const int e : incident[vi]) {
            const int sz = static_cast<int>(edges[e].size());
            if (delta > 0) {
                ++chosen_cnt[e];
                if (chosen_cnt[e] == sz - 1) {
                    for (const int w : edges[e])
                        if (!in_chosen[w]) ++saturated[w];
                }
            } else {
                if (chosen_cnt[e] == sz - 1) {
                    for (const int w : edges[e])
                        if (!in_chosen[w]) --saturated[w];
                }
                --chosen_cnt[e];
            }
        }
    };

    auto dfs = [&](auto&& self, int pos) -> void {
        if (out_of_budget) return;
        if (++nodes > node_budget) {
            out_of_budget = true;
            return;
        }
        if (pos == v) {
            if (static_cast<std::int64_t>(chosen.size()) > best) {
                best = static_cast<std::int64_t>(chosen.size());
                best_set = chosen;
            }
            return;
        }
        // bound: everything still includable from here on
        int includable = 0;
        for (int t = pos; t < v; ++t) {
            if (saturated[order[t]] == 0) ++includable;
        }
        if (static_cast<std::int64_t>(chosen.size()) + includable <= best) return;

        const int vi = order[pos];
        if (saturated[vi] == 0) {
            in_chosen[vi] = 1;
            chosen.push_back(vi);
            adjust_edges(vi, +1);
            self(self, pos + 1);
            adjust_edges(vi, -1);
            chosen.pop_back();
            in_chosen[vi] = 0;
        }
        self(self, pos + 1);
    };
    dfs(dfs, 0);

    std::vector<Point> witness_pts;
    witness_pts.reserve(best_set.size());
    for (const int vi : best_set) witness_pts.push_back(pts[vi]);

    if (out_of_budget) {
        throw BudgetExhausted("node budget exhausted at n=" + std::to_string(n) + " for " +
                                  cls.name(),
                              best, std::move(witness_pts), nodes);
    }

    SearchResult res;
    res.n = n;
    res.cls = cls;
    res.optimum = best;
    res.witness = PointSet(std::move(witness_pts), GridSpec{n});
    res.nodes_explored = nodes;
    res.certified = true;
    res.elapsed = Clock::now() - t0;
    return res;
}

std::vector<SearchResult> extremal_table(const ConfigClass& cls, std::int64_t n_from,
                                         std::int64_t n_to, std::uint64_t node_budget) {
    std::vector<SearchResult> rows;
    for (std::int64_t n = n_from; n <= n_to; ++n) {
        const auto t0 = Clock::now();
        try {
            rows.push_back(max_free_subset_exact(n, cls, node_budget));
        } catch (const BudgetExhausted& b) {
            SearchResult r;
            r.n = n;
            r.cls = cls;
            r.optimum = b.best_size;
            r.witness = PointSet(b.best_points, GridSpec{n});
            r.nodes_explored = b.nodes;
            r.certified = false;
            r.elapsed = Clock::now() - t0;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

}  // namespace gridfree
