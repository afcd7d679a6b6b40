#include <algorithm>
#include <cmath>
#include <numeric>

#include "gridfree/detect.hpp"
#include "gridfree/errors.hpp"

namespace gridfree {

namespace {

std::int64_t isqrt_exact(std::int64_t v) {
    if (v < 0) return -1;
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Primitive leg pairs {m^2-k^2, 2mk} with both scaled legs below n, via
// Euclid's parametrization (m > k >= 1, coprime, opposite parity).
template <class F>
void for_each_primitive(std::int64_t n, F&& fn) {
    const std::int64_t cap = n - 1;
    for (std::int64_t m = 2; 2 * m - 1 <= cap; ++m) {
        for (std::int64_t k = 1; k < m; ++k) {
            const std::int64_t u = m * m - k * k, v = 2 * m * k;
            if (v > cap) break;      // v grows with k
            if (u > cap) continue;   // u shrinks with k
            if ((m - k) % 2 == 0 || std::gcd(m, k) != 1) continue;
            fn(u, v, m * m + k * k);
        }
    }
}

}  // namespace

std::uint64_t pythagorean_count(std::int64_t n) {
    if (n < 1) return 0;
    std::uint64_t count = 0;
    for_each_primitive(n, [&](std::int64_t u, std::int64_t v, std::int64_t) {
        count += 2 * static_cast<std::uint64_t>((n - 1) / std::max(u, v));
    });
    return count;
}

PythResult pythagorean_pairs(std::int64_t n) {
    PythResult res;
    if (n < 1) return res;
    for_each_primitive(n, [&](std::int64_t u, std::int64_t v, std::int64_t w) {
        for (std::int64_t t = 1; t * std::max(u, v) <= n - 1; ++t) {
            res.pairs.push_back({t * u, t * v, t * w});
            res.pairs.push_back({t * v, t * u, t * w});
        }
    });
    std::sort(res.pairs.begin(), res.pairs.end(),
              [](const PythPair& l, const PythPair& r) {
                  return l.a != r.a ? l.a < r.a : l.b < r.b;
              });
    res.count = res.pairs.size();
    return res;
}

std::uint64_t pythagorean_count_brute(std::int64_t n) {
    if (n > 3000) throw GuardExceeded("pythagorean brute oracle limited to n <= 3000");
    std::uint64_t count = 0;
    for (std::int64_t a = 1; a < n; ++a) {
        for (std::int64_t b = 1; b < n; ++b) {
            const std::int64_t s = a * a + b * b;
            const std::int64_t r = isqrt_exact(s);
            if (r * r == s) ++count;
        }
    }
    return count;
}

}  // namespace gridfree
