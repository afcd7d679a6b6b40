#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridfree/grid.hpp"

namespace gridfree {

enum class CountMethod { Fast, Brute };

struct CountReport {
    ConfigClass cls;
    std::uint64_t count = 0;
    std::string method;               // "fast" | "brute"
    std::chrono::duration<double> elapsed{0};
};

struct VerifyResult {
    bool free = false;
    std::optional<Witness> witness;   // present iff !free
};

/// Points per set over which method=brute refuses to run.
inline constexpr std::size_t kBruteGuard = 2000;
/// Fast-mode cap for the concyclic counter (documented limit; the class has
/// no subquadratic counting structure and is only needed at small scale).
inline constexpr std::size_t kConcyclicFastGuard = 300;

/// First configuration of the class in ps, in a deterministic enumeration
/// order, or absent if ps is free of the class.
std::optional<Witness> find_any(const PointSet& ps, const ConfigClass& cls);

/// free = true iff find_any comes back empty; otherwise carries the witness.
VerifyResult verify_free(const PointSet& ps, const ConfigClass& cls);

/// Exact count of unordered point subsets of ps satisfying the class
/// predicate. method=Brute enumerates all subsets (guarded); method=Fast
/// uses the per-class counting algorithm. Both agree exactly.
CountReport count_all(const PointSet& ps, const ConfigClass& cls, CountMethod method);

/// All witnesses of the class in ps (deterministic order). Fast for Rhombus;
/// other classes fall back to guarded brute enumeration.
std::vector<Witness> all_witnesses(const PointSet& ps, const ConfigClass& cls);

struct PythPair {
    std::int64_t a = 0, b = 0, c = 0;   // a^2 + b^2 = c^2
};

struct PythResult {
    std::vector<PythPair> pairs;        // sorted by (a, b)
    std::uint64_t count = 0;            // == pairs.size()
};

/// All ordered pairs (a,b) with a < n, b < n and a^2+b^2 a perfect square,
/// via primitive-triple generation.
PythResult pythagorean_pairs(std::int64_t n);

/// Count only (no materialization); same value as pythagorean_pairs(n).count.
std::uint64_t pythagorean_count(std::int64_t n);

/// Quadratic scan with an exact integer square-root test; test oracle.
std::uint64_t pythagorean_count_brute(std::int64_t n);

}  // namespace gridfree
