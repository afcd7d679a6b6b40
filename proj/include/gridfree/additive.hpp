#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridfree/grid.hpp"

namespace gridfree {

/// Subset of Z_m (modulus present) or of an integer interval (modulus absent),
/// with optional difference-multiplicity metadata. Elements are sorted.
struct ResidueSet {
    std::vector<std::int64_t> elements;
    std::optional<std::int64_t> modulus;
    std::optional<std::int64_t> claimed_g;   // verified bound, not an assumption
};

/// No triple a < b < c of elements with a + c = 2b (interval semantics).
bool is_3ap_free(const ResidueSet& s);

/// Max over d != 0 of the number of ordered pairs (x, y) with x - y = d;
/// modular semantics when a modulus is present. 0 for sets of size < 2.
std::int64_t difference_multiplicity(const ResidueSet& s);

/// True iff q = p^e for a prime p and e >= 1.
bool is_prime_power(std::int64_t q);

/// A 3-AP-free subset of [1, n]: digit-cube points on a maximal-population
/// sphere, parameters swept over a small range; exhaustive maximum search
/// below n = 64. Output is verified 3-AP-free.
ResidueSet behrend_set(std::int64_t n);

/// Perfect difference set of size q+1 in Z_m, m = q^2+q+1, via the Singer
/// cycle in the field of order q^3. Verified perfect (every nonzero residue
/// is a difference exactly once). Throws NotPrimePower.
ResidueSet singer_difference_set(std::int64_t q);

/// A verified Sidon set in [1, n]: lifted Singer set for the largest prime
/// power q with q^2+q+1 <= n; exhaustive search below n = 7.
ResidueSet sidon_in_interval(std::int64_t n);

/// A set in [1, n] in which every nonzero difference has at most 2g ordered
/// representations, of size Theta(sqrt(g n)); verified before return, with
/// the achieved multiplicity recorded in claimed_g.
ResidueSet b2_minus_g_set(std::int64_t n, std::int64_t g);

/// Exhaustive maximum 3-AP-free subset of [1, n] (branch and bound; n < 64).
ResidueSet max_3ap_free_exhaustive(std::int64_t n);

/// Largest prime power q with q^2+q+1 <= n, or nullopt.
std::optional<std::int64_t> largest_singer_q(std::int64_t n);

}  // namespace gridfree
