#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridfree/detect.hpp"
#include "gridfree/grid.hpp"

// Pair-sum (midpoint) bucket machinery shared by the parallelogram and
// rhombus detectors. Two pairs of points form a parallelogram iff they share
// a coordinate sum; they form a rhombus iff additionally their half-vectors
// are perpendicular. Counting walks all unordered point pairs grouped by
// x-sum slices to keep memory proportional to one slice.

namespace gridfree::detail {

// Fast counters require coordinates within +/-2^20 (packed bucket keys).
inline constexpr std::int64_t kCoordBound = std::int64_t{1} << 20;

void ensure_coord_bounds(const PointSet& ps);

std::uint64_t parallelogram_fast_count(const PointSet& ps, bool allow_degenerate);
std::uint64_t rhombus_fast_count(const PointSet& ps);

/// All rhombi in ps (up to limit), deterministic order.
std::vector<Witness> enumerate_rhombi(const PointSet& ps, std::size_t limit);

std::optional<Witness> find_parallelogram(const PointSet& ps, bool allow_degenerate);

}  // namespace gridfree::detail
