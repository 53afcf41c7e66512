#pragma once

#include "quiddity/cycle.hpp"

namespace quiddity {

/**
 * All length-n sequences over the finite support of d whose classification
 * matches lambda_filter (any quiddity value when nullopt), in lexicographic
 * order. Infinite domains need the extra bound: integers enumerate
 * [-bound, bound], the nonnegative/positive domains [0, bound] / [1, bound].
 * For a bounded-integer domain the tighter of the two bounds applies. The
 * rationals are infinite even when bounded and are rejected.
 *
 * Depth-first with the partial matrix product threaded along the prefix, so
 * each sequence costs one generator multiplication per entry.
 */
std::vector<Cycle> enumerate_cycles(int n, const DomainSpec& d,
                                    std::optional<Lambda> lambda_filter,
                                    const std::optional<Integer>& bound = std::nullopt);

/// All quiddity cycles with lengths in [min_length, max_length] over the
/// integer box [-bound, bound], in (length, lexicographic) order. Shared
/// sample pool for the property suites.
std::vector<Cycle> quiddity_pool(int min_length, int max_length, const Integer& bound);

/**
 * Self-check over the length-n hits of the integer box [-bound, bound]:
 * (i) every hit classifies on independent recomputation, (ii) the hit set
 * is closed under the dihedral action, (iii) for 3 <= n <= 7 the
 * reduction-based irreducibility verdict over the box agrees with brute
 * force over all sums of enumerated factor pairs.
 */
struct CrossCheckReport {
    int n;
    Integer bound;
    int hit_count = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    std::string str() const;
};

CrossCheckReport cross_check(int n, const Integer& bound);

}  // namespace quiddity
