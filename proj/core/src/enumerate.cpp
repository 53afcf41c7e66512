#include "quiddity/enumerate.hpp"

#include <functional>
#include <set>

#include "quiddity/dihedral.hpp"
#include "quiddity/factor.hpp"
#include "quiddity/sum.hpp"

namespace quiddity {

namespace {

std::vector<Scalar> support_values(const DomainSpec& d, const std::optional<Integer>& bound) {
    Integer lo, hi;
    switch (d.kind()) {
        case DomainKind::Rationals:
            throw std::invalid_argument(
                "enumerate_cycles: the rationals are infinite even when bounded");
        case DomainKind::BoundedIntegers: {
            Integer b = d.bound();
            if (bound && *bound < b) b = *bound;
            lo = -b;
            hi = b;
            break;
        }
        case DomainKind::Integers:
            if (!bound)
                throw std::invalid_argument("enumerate_cycles: infinite domain without a bound");
            lo = -*bound;
            hi = *bound;
            break;
        case DomainKind::NonNegativeIntegers:
            if (!bound)
                throw std::invalid_argument("enumerate_cycles: infinite domain without a bound");
            lo = 0;
            hi = *bound;
            break;
        case DomainKind::PositiveIntegers:
            if (!bound)
                throw std::invalid_argument("enumerate_cycles: infinite domain without a bound");
            lo = 1;
            hi = *bound;
            break;
    }
    std::vector<Scalar> values;
    for (Integer v = lo; v <= hi; ++v) values.emplace_back(v);
    return values;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(int n, const DomainSpec& d,
                                    std::optional<Lambda> lambda_filter,
                                    const std::optional<Integer>& bound) {
    if (n < 2) throw std::invalid_argument("enumerate_cycles: length must be at least 2");
    if (bound && *bound < 0)
        throw std::invalid_argument("enumerate_cycles: bound must be nonnegative");
    std::vector<Scalar> values = support_values(d, bound);

    std::vector<Cycle> out;
    std::vector<Scalar> current;
    current.reserve(static_cast<size_t>(n));
    std::function<void(int, const Mat2&)> rec = [&](int pos, const Mat2& prod) {
        if (pos == n) {
            auto lam = classify_matrix(prod);
            if (lam && (!lambda_filter || *lam == *lambda_filter)) out.emplace_back(current);
            return;
        }
        for (const Scalar& v : values) {
            current.push_back(v);
            rec(pos + 1, prod.times_generator(v));
            current.pop_back();
        }
    };
    rec(0, Mat2::identity());
    // Ascending value order makes the depth-first output lexicographic.
    return out;
}

std::vector<Cycle> quiddity_pool(int min_length, int max_length, const Integer& bound) {
    if (min_length < 2 || max_length < min_length)
        throw std::invalid_argument("quiddity_pool: need 2 <= min_length <= max_length");
    std::vector<Cycle> pool;
    DomainSpec box = DomainSpec::bounded_integers(bound);
    for (int n = min_length; n <= max_length; ++n)
        for (Cycle& c : enumerate_cycles(n, box, std::nullopt)) pool.push_back(std::move(c));
    return pool;
}

std::string CrossCheckReport::str() const {
    std::string out = "cross-check n=" + std::to_string(n) + " bound=" + bound.get_str() + ": " +
                      std::to_string(hit_count) + " cycles, " +
                      std::to_string(violations.size()) + " violations";
    for (const std::string& v : violations) out += "\n  " + v;
    return out;
}

CrossCheckReport cross_check(int n, const Integer& bound) {
    CrossCheckReport rep{n, bound, 0, {}};
    DomainSpec box = DomainSpec::bounded_integers(bound);
    std::vector<Cycle> hits = enumerate_cycles(n, box, std::nullopt);
    rep.hit_count = static_cast<int>(hits.size());
    std::set<Cycle> hit_set(hits.begin(), hits.end());

    for (const Cycle& c : hits) {
        if (!classify(c)) rep.violations.push_back("hit fails reclassification: " + c.str());
        for (const Cycle& img : orbit(c))
            if (!hit_set.count(img))
                rep.violations.push_back("orbit escapes hit set: " + c.str() + " -> " + img.str());
    }

    if (n >= 3 && n <= 7) {
        // Brute-force reducibility over the box: all sums of enumerated
        // factor pairs with k + l - 2 = n, k, l > 2.
        std::set<Cycle> products;
        for (int k = 3; k + 1 <= n; ++k) {
            const int l = n - k + 2;
            auto lefts = enumerate_cycles(k, box, std::nullopt);
            auto rights = enumerate_cycles(l, box, std::nullopt);
            for (const Cycle& a : lefts)
                for (const Cycle& b : rights) products.insert(cycle_sum(a, b));
        }
        for (const Cycle& c : hits) {
            bool brute_reducible = false;
            for (const Cycle& img : orbit(c))
                if (products.count(img)) {
                    brute_reducible = true;
                    break;
                }
            bool reduce_based = !is_irreducible(c, box);
            if (brute_reducible != reduce_based)
                rep.violations.push_back(
                    "irreducibility disagreement on " + c.str() + ": brute force says " +
                    (brute_reducible ? "reducible" : "irreducible") + ", reduction sweep says " +
                    (reduce_based ? "reducible" : "irreducible"));
        }
    }
    return rep;
}

}  // namespace quiddity
