#include <doctest.h>

#include <quiddity/enumerate.hpp>
#include <quiddity/factor.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace quiddity;

namespace {

Cycle all_ones(int n) {
    return oracles::make_cycle(std::vector<long>(static_cast<std::size_t>(n), 1));
}

// Brute-force split finder over an integer box: all (a, b) pairs of
// box-enumerated quiddity cycles with oracle_sum(a, b) equal to c.
std::vector<std::pair<std::vector<long>, std::vector<long>>> brute_splits(
    const std::vector<long>& c, int k, long bound) {
    std::vector<std::pair<std::vector<long>, std::vector<long>>> found;
    std::size_t l = c.size() - static_cast<std::size_t>(k) + 2;
    auto as = oracles::odometer_hits(static_cast<std::size_t>(k), -bound, bound, std::nullopt);
    auto bs = oracles::odometer_hits(l, -bound, bound, std::nullopt);
    oracles::Vec cv;
    for (long x : c) cv.push_back(oracles::BigRat(x));
    for (const auto& a : as)
        for (const auto& b : bs) {
            oracles::Vec av, bv;
            for (long x : a) av.push_back(oracles::BigRat(x));
            for (long x : b) bv.push_back(oracles::BigRat(x));
            if (oracles::oracle_sum(av, bv) == cv) found.push_back({a, b});
        }
    return found;
}

bool within_box(const Cycle& c, long bound) {
    return c.in_domain(DomainSpec::bounded_integers(bound));
}

}  // namespace

TEST_CASE("split fixtures") {
    auto s = split_exact(Cycle{0, -1, 0, 1}, 3);
    REQUIRE(s.has_value());
    CHECK(s->a == Cycle{-1, -1, -1});
    CHECK(s->b == Cycle{1, 1, 1});
    CHECK(s->lambda_a == Lambda::Plus);
    CHECK(s->lambda_b == Lambda::Minus);

    auto t = split_exact(Cycle{2, 1, 2, 1}, 3);
    REQUIRE(t.has_value());
    CHECK(t->a == Cycle{1, 1, 1});
    CHECK(t->b == Cycle{1, 1, 1});

    auto u = split_exact(Cycle{2, 1, 3, 1, 2}, 3);
    REQUIRE(u.has_value());
    CHECK(u->a == Cycle{1, 1, 1});
    CHECK(u->b == Cycle{2, 1, 2, 1});
}

TEST_CASE("split returns none when the interior product blocks it") {
    // Interior entry 0 gives m11 = 0 at k=3.
    CHECK(split_exact(Cycle{0, 0, 0, 0}, 3) == std::nullopt);
    CHECK(split_exact(Cycle{2, 1, 1, -1, 0}, 4) == std::nullopt);
}

TEST_CASE("split rejects bad inputs") {
    CHECK_THROWS_AS(split_exact(Cycle{2, 1, 2, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(split_exact(Cycle{2, 1, 2, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(split_exact(Cycle{1, 2, 3, 4}, 3), std::invalid_argument);
}

TEST_CASE("splits recombine exactly and certify their factors") {
    for (const Cycle& c : quiddity_pool(4, 6, 2)) {
        for (int k = 3; k <= c.length() - 1; ++k) {
            auto s = split_exact(c, k);
            if (!s) continue;
            CHECK(s->a.length() == k);
            CHECK(s->b.length() == c.length() - k + 2);
            CHECK(cycle_sum(s->a, s->b) == c);
            CHECK(classify(s->a) == s->lambda_a);
            CHECK(classify(s->b) == s->lambda_b);
            CHECK(-(s->lambda_a * s->lambda_b) == classify(c));
        }
    }
}

TEST_CASE("split agrees with brute force over a box, both directions") {
    // Completeness and uniqueness: per (c, k) the brute-force pair set over
    // the box equals the exact solution filtered to the box.
    for (std::size_t n : {5u, 6u}) {
        for (const auto& digits : oracles::odometer_hits(n, -2, 2, std::nullopt)) {
            Cycle c = oracles::make_cycle(digits);
            for (int k = 3; k <= c.length() - 1; ++k) {
                auto brute = brute_splits(digits, k, 2);
                auto exact = split_exact(c, k);
                if (exact && within_box(exact->a, 2) && within_box(exact->b, 2)) {
                    REQUIRE(brute.size() == 1);
                    CHECK(oracles::make_cycle(brute[0].first) == exact->a);
                    CHECK(oracles::make_cycle(brute[0].second) == exact->b);
                } else {
                    CHECK(brute.empty());
                }
            }
        }
    }
}

TEST_CASE("reduction fixtures for the all-ones cycle of length 9") {
    Cycle nine = all_ones(9);

    std::vector<Reduction> rs = reduce_once(nine, DomainSpec::nonnegative_integers());
    REQUIRE(rs.size() == 4);
    CHECK(rs[0].sigma.is_identity());
    CHECK(rs[0].split.a == Cycle{1, 1, 1});
    CHECK(rs[0].split.b == Cycle{0, 1, 1, 1, 1, 1, 1, 0});
    // Distinct (a, b) pairs after deduplication across all sigma.
    std::set<std::pair<std::string, std::string>> pairs;
    for (const Reduction& r : rs) {
        pairs.insert({r.split.a.str(), r.split.b.str()});
        CHECK(nine == apply(r.sigma, cycle_sum(r.split.a, r.split.b)));
        CHECK(r.split.a.in_domain(DomainSpec::nonnegative_integers()));
        CHECK(r.split.b.in_domain(DomainSpec::nonnegative_integers()));
        CHECK(r.split.a.length() > 2);
        CHECK(r.split.b.length() > 2);
    }
    CHECK(pairs.size() == rs.size());

    CHECK(reduce_once(nine, DomainSpec::positive_integers()).empty());
    CHECK(is_irreducible(nine, DomainSpec::positive_integers()));
    CHECK_FALSE(is_irreducible(nine, DomainSpec::nonnegative_integers()));
    CHECK_FALSE(is_irreducible(nine, DomainSpec::integers()));
}

TEST_CASE("irreducibility fixtures over the integers") {
    DomainSpec z = DomainSpec::integers();
    CHECK(is_irreducible(Cycle{1, 1, 1}, z));
    CHECK(is_irreducible(Cycle{-1, -1, -1}, z));
    CHECK(is_irreducible(Cycle{0, 0, 0, 0}, z));
    CHECK(is_irreducible(Cycle{2, 0, -2, 0}, z));
    CHECK(is_irreducible(Cycle{-3, 0, 3, 0}, z));
    CHECK_FALSE(is_irreducible(Cycle{1, 0, -1, 0}, z));  // ~ (-1,-1,-1) + (1,1,1)
    CHECK_FALSE(is_irreducible(Cycle{2, 1, 2, 1}, z));
    CHECK_FALSE(is_irreducible(Cycle{0, -1, 0, 1}, z));
}

TEST_CASE("reducibility respects the domain") {
    Cycle c{0, -1, 0, 1};
    CHECK_FALSE(is_irreducible(c, DomainSpec::integers()));
    CHECK_FALSE(is_irreducible(c, DomainSpec::rationals()));
    CHECK_THROWS_AS(is_irreducible(c, DomainSpec::nonnegative_integers()), DomainViolation);
    CHECK_FALSE(is_irreducible(Cycle{2, 1, 2, 1}, DomainSpec::bounded_integers(2)));
}

TEST_CASE("domain and classification preconditions throw") {
    CHECK_THROWS_AS(reduce_once(Cycle{1, 2, 3, 4}, DomainSpec::integers()), std::invalid_argument);
    CHECK_THROWS_AS(reduce_once(Cycle{0, 0}, DomainSpec::integers()), std::invalid_argument);
    CHECK_THROWS_AS(reduce_once(Cycle{0, -1, 0, 1}, DomainSpec::positive_integers()),
                    DomainViolation);
}

TEST_CASE("reduction over the rationals finds integer reductions too") {
    std::vector<Reduction> rs = reduce_once(Cycle{2, 1, 2, 1}, DomainSpec::rationals());
    CHECK(!rs.empty());
    bool has_unit = false;
    for (const Reduction& r : rs)
        if (r.split.a == Cycle{1, 1, 1} && r.split.b == Cycle{1, 1, 1}) has_unit = true;
    CHECK(has_unit);
}

TEST_CASE("decomposition of a two-leaf cycle") {
    DecompositionSet set = decompose_all(Cycle{2, 1, 2, 1}, DomainSpec::integers(), 64);
    CHECK_FALSE(set.truncated);
    REQUIRE(set.trees.size() >= 1);
    for (const DecompositionTreePtr& t : set.trees) {
        CHECK(t->leaf_count() == 2);
        CHECK(validate_tree(*t, DomainSpec::integers()));
    }
}

TEST_CASE("decomposition leaf counts can differ for one cycle") {
    DecompositionSet set = decompose_all(Cycle{4, 0, -3, -1, 0, 2, 1}, DomainSpec::integers(), 64);
    std::set<int> leaf_counts;
    for (const DecompositionTreePtr& t : set.trees) {
        leaf_counts.insert(t->leaf_count());
        CHECK(validate_tree(*t, DomainSpec::integers()));
        // Length bookkeeping: leaves lose 2 per merge.
        int leaf_len = 0;
        std::function<void(const DecompositionTree&)> walk = [&](const DecompositionTree& n) {
            if (n.is_leaf()) leaf_len += n.cycle.length();
            else { walk(*n.left); walk(*n.right); }
        };
        walk(*t);
        CHECK(leaf_len == t->cycle.length() + 2 * (t->leaf_count() - 1));
    }
    CHECK(leaf_counts.count(3) == 1);
    CHECK(leaf_counts.count(4) == 1);
}

TEST_CASE("decomposition results are sorted and structurally distinct") {
    DecompositionSet set = decompose_all(all_ones(9), DomainSpec::nonnegative_integers(), 64);
    std::set<std::string> keys;
    int prev = 0;
    for (const DecompositionTreePtr& t : set.trees) {
        CHECK(t->leaf_count() >= prev);
        prev = t->leaf_count();
        // Serialize shape: cycles plus witnesses at every node.
        std::function<std::string(const DecompositionTree&)> key =
            [&](const DecompositionTree& n) -> std::string {
            if (n.is_leaf()) return "(" + n.cycle.str() + ")";
            return "(" + n.cycle.str() + ";" + n.sigma->str() + key(*n.left) + key(*n.right) + ")";
        };
        CHECK(keys.insert(key(*t)).second);
    }
    CHECK(!set.trees.empty());
}

TEST_CASE("truncation flag reports a cut search honestly") {
    DecompositionSet tiny = decompose_all(Cycle{4, 0, -3, -1, 0, 2, 1}, DomainSpec::integers(), 2);
    CHECK(tiny.trees.size() == 2);
    CHECK(tiny.truncated);
}

TEST_CASE("irreducible cycles decompose to a single leaf") {
    DecompositionSet set = decompose_all(Cycle{0, 0, 0, 0}, DomainSpec::integers(), 8);
    REQUIRE(set.trees.size() == 1);
    CHECK(set.trees[0]->is_leaf());
    CHECK(validate_tree(*set.trees[0], DomainSpec::integers()));
}

TEST_CASE("tree constructors enforce their invariants") {
    auto leaf = make_leaf(Cycle{1, 1, 1});
    CHECK(leaf->is_leaf());
    CHECK(leaf->lambda == Lambda::Minus);
    CHECK_THROWS_AS(make_leaf(Cycle{1, 2, 3}), std::invalid_argument);

    auto node = make_node(Cycle{2, 1, 2, 1}, leaf, leaf);
    CHECK(node->sigma.has_value());
    CHECK(node->sigma->is_identity());  // first witness in canonical order
    CHECK(apply(*node->sigma, cycle_sum(node->left->cycle, node->right->cycle)) == node->cycle);
    CHECK_THROWS_AS(make_node(Cycle{3, 1, 3, 1, 3, 1}, leaf, leaf), std::invalid_argument);
}

TEST_CASE("validate_tree rejects corrupted trees") {
    auto leaf = make_leaf(Cycle{1, 1, 1});
    auto node = make_node(Cycle{2, 1, 2, 1}, leaf, leaf);
    CHECK(validate_tree(*node, DomainSpec::integers()));
    // A leaf that is reducible over the domain fails revalidation.
    auto fat_leaf = make_leaf(Cycle{2, 1, 2, 1});
    CHECK_FALSE(validate_tree(*fat_leaf, DomainSpec::integers()));
    // Domain mismatch: factors outside the claimed domain.
    auto neg = make_node(Cycle{0, -1, 0, 1}, make_leaf(Cycle{-1, -1, -1}), make_leaf(Cycle{1, 1, 1}));
    CHECK(validate_tree(*neg, DomainSpec::integers()));
    CHECK_FALSE(validate_tree(*neg, DomainSpec::nonnegative_integers()));
}

TEST_CASE("right factor search fixtures") {
    DomainSpec z = DomainSpec::integers();
    Cycle c{2, 1, 1, -1, 0};

    auto plain = right_factor_search(c, z, false, false);
    REQUIRE(plain.has_value());
    CHECK(plain->sigma.is_identity());
    CHECK(plain->split.a == Cycle{1, 1, 1});
    CHECK(plain->split.b == Cycle{0, -1, 0, 1});
    CHECK(cycle_sum(plain->split.a, plain->split.b) == c);

    CHECK(right_factor_search(c, z, true, false) == std::nullopt);
}

TEST_CASE("right factor search with dihedral twists stays verifiable") {
    DomainSpec z = DomainSpec::integers();
    Cycle c{2, 1, 1, -1, 0};
    auto r = right_factor_search(c, z, true, true);
    if (r) {
        CHECK(c == apply(r->sigma, cycle_sum(r->split.a, r->split.b)));
        CHECK(is_irreducible(r->split.b, z));
    }
    // k-ascending scan: k=3 offers a reducible right factor, k=4 offers no
    // split at all, so the first admissible hit sits at k=5.
    auto s = right_factor_search(Cycle{3, 1, 3, 1, 3, 1}, z, true, false);
    REQUIRE(s.has_value());
    CHECK(s->split.k == 5);
    CHECK(s->split.a == Cycle{2, 1, 3, 1, 2});
    CHECK(s->split.b == Cycle{1, 1, 1});
    CHECK(is_irreducible(s->split.b, z));
    CHECK(cycle_sum(s->split.a, s->split.b) == Cycle{3, 1, 3, 1, 3, 1});
}

TEST_CASE("left-nested factorization of a fully reducible cycle") {
    NestedFactorization f =
        left_nested_factorization(Cycle{2, 1, 3, 1, 2}, DomainSpec::integers(), 100000);
    CHECK(f.status == NestedFactorization::Status::Complete);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.twists.size() == 2);
    CHECK_FALSE(f.residue.has_value());
    for (const Cycle& a : f.factors) CHECK(is_irreducible(a, DomainSpec::integers()));
    CHECK(evaluate_nested(f) == Cycle{2, 1, 3, 1, 2});
    CHECK(f.budget_used > 0);
}

TEST_CASE("left-nested factorization of an irreducible cycle is itself") {
    NestedFactorization f = left_nested_factorization(Cycle{1, 1, 1}, DomainSpec::integers(), 1000);
    CHECK(f.status == NestedFactorization::Status::Complete);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == Cycle{1, 1, 1});
    CHECK(f.twists.empty());
    CHECK(evaluate_nested(f) == Cycle{1, 1, 1});
}

TEST_CASE("left-nested factorization respects its budget") {
    NestedFactorization f =
        left_nested_factorization(Cycle{3, 1, 3, 1, 3, 1}, DomainSpec::integers(), 1);
    CHECK(f.status == NestedFactorization::Status::BudgetExhausted);
    REQUIRE(f.residue.has_value());
    CHECK(f.factors.size() == f.twists.size());
    CHECK(evaluate_nested(f) == Cycle{3, 1, 3, 1, 3, 1});

    NestedFactorization full =
        left_nested_factorization(Cycle{3, 1, 3, 1, 3, 1}, DomainSpec::integers(), 1000000);
    CHECK(full.status == NestedFactorization::Status::Complete);
    CHECK(full.factors.size() == 4);
    CHECK(evaluate_nested(full) == Cycle{3, 1, 3, 1, 3, 1});
}

TEST_CASE("left-nested factorization over a domain with no factorization") {
    // The all-ones cycle of length 9 is irreducible over the positive
    // integers, but it is not irreducible as a single factor either: it IS
    // irreducible, so the factorization is itself.
    NestedFactorization f =
        left_nested_factorization(all_ones(9), DomainSpec::positive_integers(), 100000);
    CHECK(f.status == NestedFactorization::Status::Complete);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == all_ones(9));
}

TEST_CASE("catalog over the nonnegative integers matches the reference") {
    IrreducibleCatalog cat =
        irreducible_catalog(DomainSpec::nonnegative_integers(), 6, Integer(6));
    REQUIRE(cat.computed.size() == 2);
    CHECK(cat.computed[0] == Cycle{1, 1, 1});
    CHECK(cat.computed[1] == Cycle{0, 0, 0, 0});
    CHECK(cat.computed == cat.reference);
    CHECK(cat.only_computed.empty());
    CHECK(cat.only_reference.empty());
    REQUIRE(cat.probe.has_value());
    CHECK_FALSE(cat.probe->discrepancy);
}

TEST_CASE("catalog over the integers surfaces the all-zeros discrepancy") {
    IrreducibleCatalog cat = irreducible_catalog(DomainSpec::integers(), 4, Integer(3));
    REQUIRE(cat.probe.has_value());
    CHECK(cat.probe->cycle == Cycle{0, 0, 0, 0});
    CHECK(cat.probe->computed_irreducible);
    CHECK_FALSE(cat.probe->reference_irreducible);
    CHECK(cat.probe->discrepancy);
    REQUIRE(cat.only_computed.size() == 1);
    CHECK(cat.only_computed[0] == Cycle{0, 0, 0, 0});
    CHECK(cat.only_reference.empty());

    // Both length-3 units, plus the canonical (a,0,-a,0) forms for 2 <= a <= 3.
    std::set<std::string> computed;
    for (const Cycle& c : cat.computed) computed.insert(c.str());
    CHECK(computed.count("1,1,1") == 1);
    CHECK(computed.count("-1,-1,-1") == 1);
    CHECK(computed.count("-2,0,2,0") == 1);
    CHECK(computed.count("-3,0,3,0") == 1);
    CHECK(computed.count("0,0,0,0") == 1);
    CHECK(computed.size() == 5);
    CHECK_FALSE(cat.notes.empty());
}

TEST_CASE("catalog rejects unsupported parameters") {
    CHECK_THROWS_AS(irreducible_catalog(DomainSpec::rationals(), 4, Integer(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(irreducible_catalog(DomainSpec::integers(), 2, Integer(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(irreducible_catalog(DomainSpec::integers(), 4, Integer(-1)),
                    std::invalid_argument);
}
