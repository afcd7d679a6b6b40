#include "midpoint.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_map>

#include "gridfree/errors.hpp"
#include "gridfree/pool.hpp"
#include "gridfree/predicates.hpp"

namespace gridfree::detail {

namespace {

constexpr std::int64_t kDirOffset = std::int64_t{1} << 22;

// Packed primitive direction of (dx, dy), dx >= 0 after normalization.
std::uint64_t pack_dir(std::int64_t dx, std::int64_t dy) {
    auto [px, py] = primitive_dir(dx, dy);
    return (static_cast<std::uint64_t>(px) << 23) | static_cast<std::uint64_t>(py + kDirOffset);
}

std::uint64_t perp_dir(std::uint64_t key) {
    const std::int64_t dx = static_cast<std::int64_t>(key >> 23);
    const std::int64_t dy = static_cast<std::int64_t>(key & ((1u << 23) - 1)) - kDirOffset;
    std::int64_t a = -dy, b = dx;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return (static_cast<std::uint64_t>(a) << 23) | static_cast<std::uint64_t>(b + kDirOffset);
}

constexpr std::uint64_t choose2(std::uint64_t t) { return t * (t - 1) / 2; }

struct Columns {
    std::vector<std::int64_t> xs;               // sorted distinct
    std::vector<std::vector<std::int64_t>> ys;  // ys[i] ascending
    std::int64_t min_y = 0, max_y = 0;
};

Columns build_columns(const PointSet& ps) {
    Columns c;
    for (const Point& p : ps.points()) {   // canonical order: x asc, then y asc
        if (c.xs.empty() || c.xs.back() != p.x) {
            c.xs.push_back(p.x);
            c.ys.emplace_back();
        }
        c.ys.back().push_back(p.y);
    }
    c.min_y = ps.points().front().y;
    c.max_y = c.min_y;
    for (const Point& p : ps.points()) {
        c.min_y = std::min(c.min_y, p.y);
        c.max_y = std::max(c.max_y, p.y);
    }
    return c;
}

// Column pairs (i <= j) grouped by x-sum via counting sort.
struct SlicePlan {
    std::vector<std::uint32_t> offsets;              // per realized sum, size slices+1
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::uint64_t max_slice_entries = 0;             // max point pairs in one slice
};

SlicePlan plan_slices(const Columns& c) {
    SlicePlan plan;
    const std::size_t nc = c.xs.size();
    const std::uint64_t col_pairs = static_cast<std::uint64_t>(nc) * (nc + 1) / 2;
    if (col_pairs > 300'000'000ULL) {
        throw GuardExceeded("set too wide for fast midpoint counting (" +
                            std::to_string(nc) + " columns)");
    }
    const std::int64_t base = 2 * c.xs.front();
    const std::size_t range = static_cast<std::size_t>(2 * c.xs.back() - base) + 1;

    std::vector<std::uint32_t> count(range + 1, 0);
    for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t j = i; j < nc; ++j) ++count[c.xs[i] + c.xs[j] - base];
    }
    plan.offsets.assign(range + 1, 0);
    std::uint32_t acc = 0;
    for (std::size_t s = 0; s < range; ++s) {
        plan.offsets[s] = acc;
        acc += count[s];
    }
    plan.offsets[range] = acc;
    plan.pairs.resize(acc);
    std::vector<std::uint32_t> cursor(plan.offsets.begin(), plan.offsets.end() - 1);
    for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t j = i; j < nc; ++j) {
            plan.pairs[cursor[c.xs[i] + c.xs[j] - base]++] = {static_cast<std::uint32_t>(i),
                                                              static_cast<std::uint32_t>(j)};
        }
    }
    std::vector<std::uint64_t> slice_entries(range, 0);
    for (std::size_t i = 0; i < nc; ++i) {
        for (std::size_t j = i; j < nc; ++j) {
            const std::size_t s = static_cast<std::size_t>(c.xs[i] + c.xs[j] - base);
            slice_entries[s] += (i == j) ? choose2(c.ys[i].size())
                                         : static_cast<std::uint64_t>(c.ys[i].size()) *
                                               c.ys[j].size();
        }
    }
    for (std::uint64_t e : slice_entries)
        plan.max_slice_entries = std::max(plan.max_slice_entries, e);
    return plan;
}

unsigned capped_workers(const SlicePlan& plan, std::size_t bytes_per_entry,
                        std::size_t fixed_bytes) {
    const std::uint64_t per_worker = plan.max_slice_entries * bytes_per_entry + fixed_bytes;
    const std::uint64_t budget = 800'000'000ULL;
    const std::uint64_t cap = std::max<std::uint64_t>(1, budget / std::max<std::uint64_t>(per_worker, 1));
    return static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), cap));
}

// Runs fn over a range of slice indices on each of `workers` threads and
// sums the results.
std::uint64_t over_slices(std::size_t slices, unsigned workers,
                          const std::function<std::uint64_t(std::size_t, std::size_t)>& fn) {
    if (slices == 0) return 0;
    if (workers <= 1) return fn(0, slices);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = slices * w / workers;
        const std::size_t hi = slices * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] { partial[w] = fn(lo, hi); });
    }
    for (auto& t : threads) t.join();
    std::uint64_t total = 0;
    for (std::uint64_t v : partial) total += v;
    return total;
}

}  // namespace

void ensure_coord_bounds(const PointSet& ps) {
    for (const Point& p : ps.points()) {
        if (p.x < -kCoordBound || p.x > kCoordBound || p.y < -kCoordBound || p.y > kCoordBound) {
            throw GuardExceeded("coordinate outside +/-2^20; fast counting unavailable");
        }
    }
}

std::uint64_t parallelogram_fast_count(const PointSet& ps, bool allow_degenerate) {
    if (ps.size() < 4) return 0;
    ensure_coord_bounds(ps);
    const Columns cols = build_columns(ps);
    const SlicePlan plan = plan_slices(cols);
    const std::size_t slices = plan.offsets.size() - 1;
    const std::size_t sy_range = static_cast<std::size_t>(2 * (cols.max_y - cols.min_y)) + 1;
    const std::int64_t sy_base = 2 * cols.min_y;

    // Degenerate quadruples are two same-midpoint pairs on one line, i.e.
    // same primitive half-vector direction, so the nondegenerate count is
    // bucket pairs minus same-direction bucket pairs.
    const bool need_dirs = !allow_degenerate;
    const unsigned workers = capped_workers(plan, need_dirs ? 16 : 0, sy_range * 8 + (1 << 20));

    auto run = [&](std::size_t lo, std::size_t hi) -> std::uint64_t {
        std::uint64_t total = 0;
        std::vector<std::uint32_t> bucket_count(sy_range, 0);
        std::vector<std::uint32_t> touched;
        std::vector<std::int32_t> heads(need_dirs ? sy_range : 0, -1);
        struct Entry {
            std::uint64_t dir;
            std::int32_t next;
        };
        std::vector<Entry> entries;
        std::vector<std::uint64_t> dirs;

        for (std::size_t s = lo; s < hi; ++s) {
            entries.clear();
            auto add = [&](std::int64_t sy, std::int64_t dx, std::int64_t dy) {
                const std::size_t off = static_cast<std::size_t>(sy - sy_base);
                if (bucket_count[off]++ == 0) touched.push_back(static_cast<std::uint32_t>(off));
                if (need_dirs) {
                    entries.push_back({pack_dir(dx, dy), heads[off]});
                    heads[off] = static_cast<std::int32_t>(entries.size() - 1);
                }
            };
            for (std::uint32_t pi = plan.offsets[s]; pi < plan.offsets[s + 1]; ++pi) {
                const auto [i, j] = plan.pairs[pi];
                const auto& yi = cols.ys[i];
                if (i == j) {
                    for (std::size_t u = 0; u < yi.size(); ++u)
                        for (std::size_t v = u + 1; v < yi.size(); ++v)
                            add(yi[u] + yi[v], 0, 1);
                } else {
                    const auto& yj = cols.ys[j];
                    const std::int64_t dx = cols.xs[j] - cols.xs[i];
                    for (std::int64_t y1 : yi)
                        for (std::int64_t y2 : yj) add(y1 + y2, dx, y2 - y1);
                }
            }
            for (std::uint32_t off : touched) {
                total += choose2(bucket_count[off]);
                if (need_dirs) {
                    dirs.clear();
                    for (std::int32_t e = heads[off]; e >= 0; e = entries[e].next)
                        dirs.push_back(entries[e].dir);
                    std::sort(dirs.begin(), dirs.end());
                    for (std::size_t a = 0; a < dirs.size();) {
                        std::size_t b = a;
                        while (b < dirs.size() && dirs[b] == dirs[a]) ++b;
                        total -= choose2(b - a);
                        a = b;
                    }
                    heads[off] = -1;
                }
                bucket_count[off] = 0;
            }
            touched.clear();
        }
        return total;
    };
    return over_slices(slices, workers, run);
}

std::uint64_t rhombus_fast_count(const PointSet& ps) {
    if (ps.size() < 4) return 0;
    ensure_coord_bounds(ps);
    const Columns cols = build_columns(ps);
    const SlicePlan plan = plan_slices(cols);
    const std::size_t slices = plan.offsets.size() - 1;
    const std::size_t sy_range = static_cast<std::size_t>(2 * (cols.max_y - cols.min_y)) + 1;
    const std::int64_t sy_base = 2 * cols.min_y;
    const unsigned workers = capped_workers(plan, 16, sy_range * 4 + (1 << 20));

    auto run = [&](std::size_t lo, std::size_t hi) -> std::uint64_t {
        std::uint64_t total = 0;
        std::vector<std::int32_t> heads(sy_range, -1);
        std::vector<std::uint32_t> touched;
        struct Entry {
            std::uint64_t dir;
            std::int32_t next;
        };
        std::vector<Entry> entries;
        std::vector<std::uint64_t> dirs;

        for (std::size_t s = lo; s < hi; ++s) {
            entries.clear();
            auto add = [&](std::int64_t sy, std::int64_t dx, std::int64_t dy) {
                const std::size_t off = static_cast<std::size_t>(sy - sy_base);
                if (heads[off] < 0) touched.push_back(static_cast<std::uint32_t>(off));
                entries.push_back({pack_dir(dx, dy), heads[off]});
                heads[off] = static_cast<std::int32_t>(entries.size() - 1);
            };
            for (std::uint32_t pi = plan.offsets[s]; pi < plan.offsets[s + 1]; ++pi) {
                const auto [i, j] = plan.pairs[pi];
                const auto& yi = cols.ys[i];
                if (i == j) {
                    for (std::size_t u = 0; u < yi.size(); ++u)
                        for (std::size_t v = u + 1; v < yi.size(); ++v)
                            add(yi[u] + yi[v], 0, 1);
                } else {
                    const auto& yj = cols.ys[j];
                    const std::int64_t dx = cols.xs[j] - cols.xs[i];
                    for (std::int64_t y1 : yi)
                        for (std::int64_t y2 : yj) add(y1 + y2, dx, y2 - y1);
                }
            }
            for (std::uint32_t off : touched) {
                dirs.clear();
                for (std::int32_t e = heads[off]; e >= 0; e = entries[e].next)
                    dirs.push_back(entries[e].dir);
                heads[off] = -1;
                std::sort(dirs.begin(), dirs.end());
                // Perpendicular direction pairs within a shared-midpoint
                // bucket; count each unordered pair once via d < perp(d).
                for (std::size_t a = 0; a < dirs.size();) {
                    std::size_t b = a;
                    while (b < dirs.size() && dirs[b] == dirs[a]) ++b;
                    const std::uint64_t q = perp_dir(dirs[a]);
                    if (dirs[a] < q) {
                        const auto [ql, qr] = std::equal_range(dirs.begin(), dirs.end(), q);
                        total += static_cast<std::uint64_t>(b - a) *
                                 static_cast<std::uint64_t>(qr - ql);
                    }
                    a = b;
                }
            }
            touched.clear();
        }
        return total;
    };
    return over_slices(slices, workers, run);
}

std::vector<Witness> enumerate_rhombi(const PointSet& ps, std::size_t limit) {
    std::vector<Witness> out;
    if (ps.size() < 4 || limit == 0) return out;
    ensure_coord_bounds(ps);
    const Columns cols = build_columns(ps);
    const SlicePlan plan = plan_slices(cols);
    const std::size_t slices = plan.offsets.size() - 1;
    const std::size_t sy_range = static_cast<std::size_t>(2 * (cols.max_y - cols.min_y)) + 1;
    const std::int64_t sy_base = 2 * cols.min_y;

    std::vector<std::int32_t> heads(sy_range, -1);
    std::vector<std::uint32_t> touched;
    struct Entry {
        Point p, q;
        std::uint64_t dir;
        std::int32_t next;
    };
    std::vector<Entry> entries;
    struct Tag {
        std::uint64_t dir;
        std::uint32_t idx;
        bool operator<(const Tag& o) const {
            return dir != o.dir ? dir < o.dir : idx < o.idx;
        }
    };
    std::vector<Tag> tags;

    // Sequential by construction: witness order must not depend on threads.
    for (std::size_t s = 0; s < slices && out.size() < limit; ++s) {
        entries.clear();
        auto add = [&](Point p, Point q) {
            const std::size_t off = static_cast<std::size_t>(p.y + q.y - sy_base);
            if (heads[off] < 0) touched.push_back(static_cast<std::uint32_t>(off));
            entries.push_back({p, q, pack_dir(q.x - p.x, q.y - p.y), heads[off]});
            heads[off] = static_cast<std::int32_t>(entries.size() - 1);
        };
        for (std::uint32_t pi = plan.offsets[s]; pi < plan.offsets[s + 1]; ++pi) {
            const auto [i, j] = plan.pairs[pi];
            const auto& yi = cols.ys[i];
            if (i == j) {
                for (std::size_t u = 0; u < yi.size(); ++u)
                    for (std::size_t v = u + 1; v < yi.size(); ++v)
                        add({cols.xs[i], yi[u]}, {cols.xs[i], yi[v]});
            } else {
                const auto& yj = cols.ys[j];
                for (std::int64_t y1 : yi)
                    for (std::int64_t y2 : yj) add({cols.xs[i], y1}, {cols.xs[j], y2});
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t off : touched) {
            tags.clear();
            for (std::int32_t e = heads[off]; e >= 0; e = entries[e].next)
                tags.push_back({entries[e].dir, static_cast<std::uint32_t>(e)});
            heads[off] = -1;
            std::sort(tags.begin(), tags.end());
            for (std::size_t a = 0; a < tags.size() && out.size() < limit;) {
                std::size_t b = a;
                while (b < tags.size() && tags[b].dir == tags[a].dir) ++b;
                const std::uint64_t q = perp_dir(tags[a].dir);
                if (tags[a].dir < q) {
                    const Tag probe{q, 0};
                    auto ql = std::lower_bound(tags.begin(), tags.end(), probe,
                                               [](const Tag& l, const Tag& r) {
                                                   return l.dir < r.dir;
                                               });
                    for (std::size_t u = a; u < b && out.size() < limit; ++u) {
                        for (auto it = ql; it != tags.end() && it->dir == q &&
                                           out.size() < limit; ++it) {
                            const Entry& e1 = entries[tags[u].idx];
                            const Entry& e2 = entries[it->idx];
                            std::vector<Point> w{e1.p, e1.q, e2.p, e2.q};
                            std::sort(w.begin(), w.end());
                            out.push_back({ConfigClass::rhombus(), std::move(w)});
                        }
                    }
                }
                a = b;
            }
        }
        touched.clear();
    }
    return out;
}

std::optional<Witness> find_parallelogram(const PointSet& ps, bool allow_degenerate) {
    if (ps.size() < 4) return std::nullopt;
    ensure_coord_bounds(ps);
    const auto& pts = ps.points();
    const auto key_of = [](Point a, Point b) {
        constexpr std::int64_t off = std::int64_t{1} << 21;
        return (static_cast<std::uint64_t>(a.x + b.x + off) << 23) |
               static_cast<std::uint64_t>(a.y + b.y + off);
    };

    // Pass 1: bucket sizes only (memory stays proportional to midpoints).
    std::unordered_map<std::uint64_t, std::uint32_t> count;
    count.reserve(pts.size() * 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) ++count[key_of(pts[i], pts[j])];

    // Pass 2: within buckets of two or more pairs, the first stored pair plus
    // the first later pair (of a different direction, for the nondegenerate
    // variant) forms the witness.
    struct Stored {
        Point p, q;
        std::uint64_t dir;
    };
    std::unordered_map<std::uint64_t, Stored> first;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const std::uint64_t key = key_of(pts[i], pts[j]);
            const auto cit = count.find(key);
            if (cit->second < 2) continue;
            const std::uint64_t dir =
                pack_dir(pts[j].x - pts[i].x, pts[j].y - pts[i].y);
            auto [sit, inserted] = first.try_emplace(key, Stored{pts[i], pts[j], dir});
            if (inserted) continue;
            if (!allow_degenerate && sit->second.dir == dir) continue;
            std::vector<Point> w{sit->second.p, sit->second.q, pts[i], pts[j]};
            std::sort(w.begin(), w.end());
            return Witness{ConfigClass::parallelogram(allow_degenerate), std::move(w)};
        }
    }
    return std::nullopt;
}

}  // namespace gridfree::detail
