#pragma once

#include <stdexcept>

#include "quiddity/dihedral.hpp"

namespace quiddity {

/// Raised when an exhaustive witness search comes up empty on inputs for
/// which a witness is guaranteed to exist. Indicates a bug, never expected.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/**
 * The glue sum of two cycles a (length k) and b (length l):
 *     (a_1+b_l, a_2, ..., a_{k-1}, a_k+b_1, b_2, ..., b_{l-1})
 * of length k+l-2. Both operands must have length >= 2. When a and b are
 * quiddity cycles with values lambda' and lambda'', the sum is a
 * (-lambda'*lambda'')-quiddity cycle.
 */
Cycle cycle_sum(const Cycle& a, const Cycle& b);

/// Entries in reversed order.
Cycle reversed(const Cycle& c);

/**
 * Two-directional composition check, expected to hold for every input:
 * given a quiddity cycle a with value lambda', the sequence b is a quiddity
 * cycle with value lambda'' if and only if cycle_sum(a, b) classifies as
 * -lambda'*lambda''. Throws if a is not a quiddity cycle.
 */
bool lambda_composition_check(const Cycle& a, const Cycle& b);

/**
 * The rotation sigma with cycle_sum(a, b) == apply(sigma, cycle_sum(b, a)):
 * rot = l-1 on k+l-2 points, no reflection. Requires quiddity operands of
 * lengths > 2.
 */
DihedralElem commutativity_witness(const Cycle& a, const Cycle& b);

struct AssociativityWitness {
    DihedralElem outer;  // rotation by 1 on l+m-2 points
    DihedralElem inner;  // rotation by l-1 on l points
};

/**
 * Witness pair for re-associating a sum of three quiddity cycles (lengths
 * k, l, m, all > 2):
 *     cycle_sum(cycle_sum(a, b), c)
 *         == cycle_sum(a, apply(outer, cycle_sum(apply(inner, b), c))).
 * The equality is exact and verified before returning.
 */
AssociativityWitness associativity_witness(const Cycle& a, const Cycle& b, const Cycle& c);

struct DichotomyWitness {
    int branch;          // 1: right factor b stays, 2: right factor c stays
    DihedralElem inner;  // acts on c (branch 1) or b (branch 2)
    DihedralElem outer;  // acts on the partial sum with a
};

/**
 * For quiddity cycles a, b, c (lengths > 2) and any sigma acting on
 * cycle_sum(b, c), finds (branch, inner, outer) such that
 *     cycle_sum(a, apply(sigma, cycle_sum(b, c)))
 * is dihedral-equivalent to
 *     branch 1:  cycle_sum(apply(outer, cycle_sum(a, apply(inner, c))), b)
 *     branch 2:  cycle_sum(apply(outer, cycle_sum(a, apply(inner, b))), c).
 * The search is exhaustive over both branches in canonical candidate order
 * and returns the first hit; exhaustion throws TheoremViolation.
 */
DichotomyWitness dichotomy_witness(const Cycle& a, const Cycle& b, const Cycle& c,
                                   const DihedralElem& sigma);

}  // namespace quiddity
