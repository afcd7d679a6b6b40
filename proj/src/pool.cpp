#include "gridfree/pool.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace gridfree {

unsigned worker_count() {
    unsigned n = 0;
    if (const char* env = std::getenv("GRIDFREE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) n = static_cast<unsigned>(std::min(v, 256L));
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

std::uint64_t parallel_sum(std::int64_t begin, std::int64_t end,
                           const std::function<std::uint64_t(std::int64_t, std::int64_t)>& fn) {
    const std::int64_t total = end - begin;
    if (total <= 0) return 0;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::int64_t>(worker_count(), total));
    if (workers <= 1) return fn(begin, end);

    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::int64_t lo = begin + total * w / workers;
        const std::int64_t hi = begin + total * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] { partial[w] = fn(lo, hi); });
    }
    for (auto& t : threads) t.join();

    std::uint64_t sum = 0;
    for (std::uint64_t v : partial) sum += v;
    return sum;
}

}  // namespace gridfree
