#include <doctest.h>

#include <quiddity/dihedral.hpp>
#include <quiddity/enumerate.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace quiddity;

namespace {

std::vector<Cycle> box(int n, long bound, std::optional<Lambda> filter = std::nullopt) {
    return enumerate_cycles(n, DomainSpec::bounded_integers(bound), filter);
}

}  // namespace

TEST_CASE("the only length-2 cycle is the zero pair") {
    std::vector<Cycle> hits = box(2, 3);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == Cycle{0, 0});
    CHECK(classify(hits[0]) == Lambda::Minus);
}

TEST_CASE("length-3 hits are the two constant unit cycles") {
    std::vector<Cycle> hits = box(3, 3);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0] == Cycle{-1, -1, -1});
    CHECK(hits[1] == Cycle{1, 1, 1});
}

TEST_CASE("length-4 hits over the 3-box match the two known families") {
    std::vector<Cycle> hits = box(4, 3);
    std::set<Cycle> got(hits.begin(), hits.end());
    CHECK(got.size() == hits.size());

    std::set<Cycle> expected;
    for (const Cycle& seed : {Cycle{2, 1, 2, 1}, Cycle{-2, -1, -2, -1}})
        for (const Cycle& img : orbit(seed)) expected.insert(img);
    for (long a = -3; a <= 3; ++a) {
        std::vector<long> v{a, 0, -a, 0};
        for (const Cycle& img : orbit(oracles::make_cycle(v))) expected.insert(img);
    }
    CHECK(got == expected);
    CHECK(hits.size() == 17);
}

TEST_CASE("enumeration output is lexicographically sorted and duplicate-free") {
    for (int n : {2, 3, 4, 5}) {
        std::vector<Cycle> hits = box(n, 2);
        CHECK(std::is_sorted(hits.begin(), hits.end()));
        CHECK(std::adjacent_find(hits.begin(), hits.end()) == hits.end());
    }
}

TEST_CASE("enumeration agrees with an unpruned odometer oracle") {
    for (int n : {2, 3, 4, 5}) {
        for (long bound : {1L, 2L}) {
            auto expected = oracles::odometer_hits(static_cast<std::size_t>(n), -bound, bound,
                                                   std::nullopt);
            std::vector<Cycle> got = box(n, bound);
            REQUIRE(got.size() == expected.size());
            for (std::size_t i = 0; i < got.size(); ++i)
                CHECK(got[i] == oracles::make_cycle(expected[i]));
        }
    }
}

TEST_CASE("the lambda filter partitions the hit set") {
    for (int n : {3, 4, 5, 6}) {
        std::vector<Cycle> all = box(n, 2);
        std::vector<Cycle> plus = box(n, 2, Lambda::Plus);
        std::vector<Cycle> minus = box(n, 2, Lambda::Minus);
        CHECK(all.size() == plus.size() + minus.size());
        for (const Cycle& c : plus) CHECK(classify(c) == Lambda::Plus);
        for (const Cycle& c : minus) CHECK(classify(c) == Lambda::Minus);
        std::set<Cycle> merged(plus.begin(), plus.end());
        merged.insert(minus.begin(), minus.end());
        CHECK(merged == std::set<Cycle>(all.begin(), all.end()));
    }
}

TEST_CASE("infinite domains enumerate through the explicit bound") {
    std::vector<Cycle> z = enumerate_cycles(3, DomainSpec::integers(), std::nullopt, Integer(1));
    REQUIRE(z.size() == 2);
    CHECK(z[0] == Cycle{-1, -1, -1});

    std::vector<Cycle> nat0 =
        enumerate_cycles(4, DomainSpec::nonnegative_integers(), std::nullopt, Integer(2));
    // Without negatives only all-zeros and the t-family survive.
    REQUIRE(nat0.size() == 3);
    CHECK(nat0[0] == Cycle{0, 0, 0, 0});
    CHECK(nat0[1] == Cycle{1, 2, 1, 2});
    CHECK(nat0[2] == Cycle{2, 1, 2, 1});

    std::vector<Cycle> nat1 =
        enumerate_cycles(4, DomainSpec::positive_integers(), std::nullopt, Integer(2));
    REQUIRE(nat1.size() == 2);
    CHECK(nat1[0] == Cycle{1, 2, 1, 2});
    CHECK(nat1[1] == Cycle{2, 1, 2, 1});

    // For a bounded domain with an extra bound, the tighter one applies.
    CHECK(enumerate_cycles(4, DomainSpec::bounded_integers(1), std::nullopt, Integer(5)).size() ==
          enumerate_cycles(4, DomainSpec::bounded_integers(1), std::nullopt).size());
}

TEST_CASE("unbounded or rational enumeration is rejected") {
    CHECK_THROWS_AS(enumerate_cycles(3, DomainSpec::integers(), std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cycles(3, DomainSpec::nonnegative_integers(), std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cycles(3, DomainSpec::rationals(), std::nullopt, Integer(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cycles(1, DomainSpec::bounded_integers(1), std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("pool is ordered by length then entries and fully quiddity") {
    std::vector<Cycle> pool = quiddity_pool(3, 5, 2);
    CHECK(!pool.empty());
    for (std::size_t i = 1; i < pool.size(); ++i) {
        bool ordered = pool[i - 1].length() < pool[i].length() ||
                       (pool[i - 1].length() == pool[i].length() && pool[i - 1] < pool[i]);
        CHECK(ordered);
    }
    for (const Cycle& c : pool) {
        CHECK(c.length() >= 3);
        CHECK(c.length() <= 5);
        CHECK(classify(c).has_value());
        CHECK(c.in_domain(DomainSpec::bounded_integers(2)));
    }
}

TEST_CASE("cross check passes at the pinned desk-scale parameters") {
    for (auto [n, bound] : std::vector<std::pair<int, long>>{{2, 3}, {3, 1}, {4, 3}, {5, 2}, {6, 1}}) {
        CrossCheckReport report = cross_check(n, Integer(bound));
        INFO(report.str());
        CHECK(report.ok());
        CHECK(report.hit_count == static_cast<int>(box(n, bound).size()));
    }
}

TEST_CASE("cross check counts the known hit totals") {
    CHECK(cross_check(3, Integer(1)).hit_count == 2);
    CHECK(cross_check(4, Integer(3)).hit_count == 17);
}
