#pragma once

#include <memory>
#include <string>

#include "quiddity/sum.hpp"

namespace quiddity {

/**
 * An exact factorization c = a (+) b at split length k: a has length k,
 * b has length l = m-k+2, both are quiddity cycles with k, l > 2, and
 * -lambda_a*lambda_b equals the value of c.
 */
struct SplitSolution {
    int k;
    Cycle a;
    Cycle b;
    Lambda lambda_a;
    Lambda lambda_b;
};

/// A reduction witness: target == apply(sigma, cycle_sum(split.a, split.b)).
struct Reduction {
    DihedralElem sigma;
    SplitSolution split;
};

/**
 * The unique exact factorization of c at split length k, if one exists.
 *
 * Any quiddity factor a whose interior is the block c_2..c_{k-1} has its
 * boundary forced: with P the product of the interior generator matrices,
 * a exists iff P.m11 is +1 or -1, and then a_1 = P.m21/P.m11,
 * a_k = -P.m12/P.m11, classify(a) = -P.m11. The cofactor
 * b = (c_k - a_k, c_{k+1}, ..., c_m, c_1 - a_1) is then automatically a
 * quiddity cycle. At most one solution exists per (c, k).
 *
 * Requires 3 <= k <= length(c)-1 and classify(c) != none.
 */
std::optional<SplitSolution> split_exact(const Cycle& c, int k);

/**
 * All single-step reductions of c over domain d, per the definition of
 * reducibility: c ~ a (+) b with factor lengths > 2 and all factor entries
 * in d. Sweeps every sigma in D_m (canonical order) and every admissible k,
 * solving split_exact on apply(sigma.inverse(), c); this is a complete
 * decision procedure because any factorization fixes a's interior to a
 * contiguous block of the sigma-image. Results are deduplicated by (a, b),
 * keeping the first witness in (sigma, k) order.
 *
 * Requires length > 2, classify(c) != none (std::invalid_argument) and all
 * entries of c in d (DomainViolation).
 */
std::vector<Reduction> reduce_once(const Cycle& c, const DomainSpec& d);

/// True iff reduce_once(c, d) is empty. Same preconditions.
bool is_irreducible(const Cycle& c, const DomainSpec& d);

struct DecompositionTree;
using DecompositionTreePtr = std::shared_ptr<const DecompositionTree>;

/**
 * A binary tree of repeated reductions. Internal nodes satisfy
 * cycle == apply(*sigma, cycle_sum(left->cycle, right->cycle)); leaves have
 * no sigma and no children and are irreducible over the ambient domain.
 * Leaf lengths sum to root length + 2*(leaf count - 1).
 */
struct DecompositionTree {
    Cycle cycle;
    Lambda lambda;
    std::optional<DihedralElem> sigma;
    DecompositionTreePtr left;
    DecompositionTreePtr right;

    bool is_leaf() const { return left == nullptr; }
    int leaf_count() const;
};

DecompositionTreePtr make_leaf(const Cycle& c);

/**
 * Builds an internal node over existing subtrees. The stored sigma is the
 * canonical witness (first in group order) mapping the children's sum onto
 * c, so structurally equal factorizations serialize identically.
 * Throws std::invalid_argument when c is not equivalent to the sum.
 */
DecompositionTreePtr make_node(const Cycle& c, DecompositionTreePtr left, DecompositionTreePtr right);

struct DecompositionSet {
    std::vector<DecompositionTreePtr> trees;  // sorted by leaf count, then structure
    bool truncated;                           // true when max_results cut the search
};

/**
 * Every decomposition of c into irreducible leaves over d, found by
 * depth-first recursion on reduce_once. Children are strictly shorter than
 * their parent, so the recursion terminates. Trees are deduplicated
 * structurally; distinct trees with different leaf counts may coexist.
 * Exceeding max_results sets the truncated flag instead of failing.
 */
DecompositionSet decompose_all(const Cycle& c, const DomainSpec& d, int max_results);

/**
 * Bottom-up revalidation: every node equation holds, every recorded lambda
 * matches classify, every leaf is irreducible over d.
 */
bool validate_tree(const DecompositionTree& tree, const DomainSpec& d);

/**
 * First factorization with the right factor constrained, in deterministic
 * order (k ascending when allow_sigma is false; sigma in group order then k
 * otherwise). With require_irreducible_right, only solutions whose b is
 * irreducible over d count. The returned sigma is the identity when
 * allow_sigma is false.
 */
std::optional<Reduction> right_factor_search(const Cycle& c, const DomainSpec& d,
                                             bool require_irreducible_right, bool allow_sigma);

/**
 * A left-nested factorization
 *     c = apply(s_{n-1}, ... apply(s_1, a_1 (+) a_2) ... (+) a_n)
 * with every a_i irreducible over d. Found by peeling irreducible right
 * factors outside-in with full backtracking; the per-level search over
 * (sigma, k) is complete, so NoFactorization means none exists. The budget
 * caps the total number of split attempts across the whole search.
 */
struct NestedFactorization {
    enum class Status { Complete, BudgetExhausted, NoFactorization };

    Status status;
    /// Irreducible factors, innermost first. For Complete results,
    /// twists.size() == factors.size() - 1 and evaluation starts at
    /// factors[0]; otherwise factors holds the peeled right factors with
    /// one twist each, and evaluation starts at *residue.
    std::vector<Cycle> factors;
    std::vector<DihedralElem> twists;
    /// The unpeeled left core of the deepest partial peel; engaged exactly
    /// when status != Complete.
    std::optional<Cycle> residue;
    long long budget_used;
    std::string detail;
};

NestedFactorization left_nested_factorization(const Cycle& c, const DomainSpec& d,
                                              long long budget);

/// Folds a factorization back together; reproduces the input cycle exactly.
Cycle evaluate_nested(const NestedFactorization& f);

/// Exhaustive verdict for one cycle next to the reference catalog's claim.
struct CatalogProbe {
    Cycle cycle;
    bool computed_irreducible;
    bool reference_irreducible;
    bool discrepancy;
};

/**
 * Exhaustively computed irreducible cycles over d with lengths in
 * [3, max_length] and entry magnitudes <= bound, next to the reference
 * catalog restricted to the same box. Cycles are canonical forms, sorted by
 * length then entries. The probe reports the all-zeros length-4 cycle,
 * whose computed verdict over the integers disagrees with the reference
 * catalog; the discrepancy is surfaced, never normalized away.
 *
 * Supported domains: integers and nonnegative integers.
 */
struct IrreducibleCatalog {
    DomainSpec domain;
    int max_length;
    Integer bound;
    std::vector<Cycle> computed;
    std::vector<Cycle> reference;
    std::vector<Cycle> only_computed;   // computed but absent from the reference
    std::vector<Cycle> only_reference;  // referenced but not confirmed by search
    std::optional<CatalogProbe> probe;
    std::string notes;
};

IrreducibleCatalog irreducible_catalog(const DomainSpec& d, int max_length, const Integer& bound);

}  // namespace quiddity
