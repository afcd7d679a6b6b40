#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gridfree/grid.hpp"

namespace gridfree {

/// Certified extremal search output for one (n, class) cell.
struct SearchResult {
    std::int64_t n = 0;
    ConfigClass cls;
    std::int64_t optimum = 0;      // certified maximum iff certified
    PointSet witness;              // free subset of [n]^2 realizing optimum
    std::uint64_t nodes_explored = 0;
    bool certified = false;
    std::chrono::duration<double> elapsed{0};
};

/// Node budget ran out; carries the best incumbent found so far.
struct BudgetExhausted : std::runtime_error {
    BudgetExhausted(const std::string& what, std::int64_t best_size,
                    std::vector<Point> best, std::uint64_t nodes)
        : std::runtime_error(what), best_size(best_size),
          best_points(std::move(best)), nodes(nodes) {}
    std::int64_t best_size;
    std::vector<Point> best_points;
    std::uint64_t nodes;
};

inline constexpr std::int64_t kEnumGuardArity3 = 12;  // n cap, 3-point classes
inline constexpr std::int64_t kEnumGuardArity4 = 8;   // n cap, 4-point classes
inline constexpr std::uint64_t kDefaultNodeBudget = 400'000'000ULL;

/// All unordered tuples of [n]^2 satisfying the class predicate, in canonical
/// order. Throws GuardExceeded above the per-arity guard.
std::vector<Witness> enumerate_forbidden(std::int64_t n, const ConfigClass& cls);

/// Exact maximum configuration-free subset of [n]^2: branch and bound over
/// the forbidden-tuple hypergraph, points ordered by descending edge-degree,
/// bound = |chosen| + |includable remaining|. Never returns an uncertified
/// optimum: throws BudgetExhausted instead. symmetry_id in [0,8) permutes the
/// point enumeration by one of the grid symmetries (result-invariant).
SearchResult max_free_subset_exact(std::int64_t n, const ConfigClass& cls,
                                   std::uint64_t node_budget = kDefaultNodeBudget,
                                   unsigned symmetry_id = 0);

/// Runs max_free_subset_exact over n_from..n_to; budget-exhausted rows are
/// emitted with certified = false and the incumbent as optimum.
std::vector<SearchResult> extremal_table(const ConfigClass& cls, std::int64_t n_from,
                                         std::int64_t n_to,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace gridfree
