#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gridfree/grid.hpp"

namespace gridfree {

/// Reproducible record of a construction run. For alteration constructors
/// base_size is the sampled set size, so base_size - deleted = final_size.
struct ConstructionReport {
    std::string name;
    std::int64_t n = 0;
    std::map<std::string, std::string> parameters;
    std::optional<std::uint64_t> seed;
    std::int64_t base_size = 0;
    std::int64_t deleted = 0;
    std::int64_t final_size = 0;
    bool verified = false;            // true only after verify_free passed
    std::chrono::duration<double> elapsed{0};
};

struct Construction {
    PointSet points;
    ConstructionReport report;
};

/// Union of the bottom row and the left column of [n]^2; size 2n-1, free of
/// nondegenerate parallelograms.
Construction l_shape_nd_para_free(std::int64_t n, std::int64_t verify_guard = 5000);

/// Random-sampling-plus-deletion rhombus-free subset of [1,n] x S for a
/// Sidon set S: count rhombi R in the base, sample with
/// p = min(1, (|B|/4R)^(1/3)), then greedily delete max-incidence points
/// until rhombus-free. Deterministic for a fixed seed.
Construction rhombus_free_random(std::int64_t n, std::uint64_t seed,
                                 std::int64_t n_guard = 4096);

/// Same alteration with rows taken from a B2^-[g] set.
Construction rhombus_free_b2g(std::int64_t n, std::int64_t g, std::uint64_t seed,
                              std::int64_t n_guard = 4096);

/// S x S for a 3-AP-free S; free of axis-parallel kites.
Construction axis_kite_free(std::int64_t n);

/// 45-degree rotated embedding of the kite-free product into [n]^2;
/// free of axis-parallel squares.
Construction axis_square_free(std::int64_t n);

/// Axis-square-free base intersected with the best translate of a lifted
/// perfect difference set (column filter); free of squares in any
/// orientation. Throws NoPrimePowerInRange for n < 7.
Construction square_free(std::int64_t n, std::size_t verify_guard = 20000);

/// Point set {(i+1, j+1) : (i+j) mod m in D} for a perfect difference set D
/// in Z_m; meets the Zarankiewicz upper bound with equality when n = q^2+q+1.
Construction rectangle_free(std::int64_t n, std::int64_t verify_q_guard = 150);

/// Splits by parity of x+y: (even part, odd part).
std::pair<PointSet, PointSet> parity_partition(const PointSet& ps);

/// SplitMix64; the sampling PRNG (one draw per base point in canonical order).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace gridfree
