#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace gridfree {

/// Worker count honoring the GRIDFREE_THREADS environment variable
/// (unset or 0 = hardware concurrency, clamped to [1, 256]).
unsigned worker_count();

/// Splits [begin, end) into contiguous chunks, runs fn(chunk_begin, chunk_end)
/// on each worker, and sums the returned partial values. The reduction is a
/// plain integer sum, so the result is independent of the worker count.
std::uint64_t parallel_sum(std::int64_t begin, std::int64_t end,
                           const std::function<std::uint64_t(std::int64_t, std::int64_t)>& fn);

}  // namespace gridfree
