// Reference implementations the unit suites check the library against.
// Arithmetic here runs on boost::multiprecision (cpp_int / cpp_rational), not
// on the library's own scalar type, and values cross the boundary as decimal
// strings only; the two sides share no numeric code.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <quiddity/cycle.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Vec = std::vector<BigRat>;

inline BigRat to_bigrat(const quiddity::Scalar& s) { return BigRat(s.str()); }

inline Vec to_vec(const quiddity::Cycle& c) {
    Vec v;
    for (const quiddity::Scalar& s : c.entries()) v.push_back(to_bigrat(s));
    return v;
}

inline quiddity::Cycle to_cycle(const Vec& v) {
    std::vector<quiddity::Scalar> entries;
    for (const BigRat& x : v) entries.push_back(quiddity::Scalar::parse(x.str()));
    return quiddity::Cycle(std::move(entries));
}

inline quiddity::Cycle make_cycle(const std::vector<long>& v) {
    std::vector<quiddity::Scalar> entries;
    for (long x : v) entries.push_back(quiddity::Scalar(x));
    return quiddity::Cycle(std::move(entries));
}

// Row-major 2x2 matrix over cpp_rational.
struct OMat {
    BigRat a{1}, b{0}, c{0}, d{1};
};

inline OMat omul(const OMat& x, const OMat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

inline OMat ogen(const BigRat& x) { return {x, BigRat(-1), BigRat(1), BigRat(0)}; }

inline OMat oracle_matrix(const Vec& v) {
    OMat m;
    for (const BigRat& x : v) m = omul(m, ogen(x));
    return m;
}

// +1 / -1 when the product is plus or minus the identity, nullopt otherwise.
inline std::optional<int> oracle_classify(const Vec& v) {
    OMat m = oracle_matrix(v);
    if (m.b != 0 || m.c != 0 || m.a != m.d) return std::nullopt;
    if (m.a == 1) return 1;
    if (m.a == -1) return -1;
    return std::nullopt;
}

// (a1+bl, a2..a_{k-1}, a_k+b1, b2..b_{l-1}); requires k,l >= 2.
inline Vec oracle_sum(const Vec& a, const Vec& b) {
    Vec out;
    out.push_back(a.front() + b.back());
    for (std::size_t i = 1; i + 1 < a.size(); ++i) out.push_back(a[i]);
    out.push_back(a.back() + b.front());
    for (std::size_t i = 1; i + 1 < b.size(); ++i) out.push_back(b[i]);
    return out;
}

inline Vec oracle_rotate(const Vec& v, std::size_t r) {
    Vec out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[(i + r) % v.size()]);
    return out;
}

inline Vec oracle_reverse(const Vec& v) { return Vec(v.rbegin(), v.rend()); }

// All rotations of v and of its reversal (the full dihedral image set).
inline std::set<Vec> oracle_orbit(const Vec& v) {
    std::set<Vec> out;
    Vec rev = oracle_reverse(v);
    for (std::size_t r = 0; r < v.size(); ++r) {
        out.insert(oracle_rotate(v, r));
        out.insert(oracle_rotate(rev, r));
    }
    return out;
}

inline bool oracle_equivalent(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) return false;
    return oracle_orbit(x).count(y) > 0;
}

// d_{-1}=0, d_0=1, d_j = s_j d_{j-1} - d_{j-2}; returns the last d.
inline BigRat oracle_continuant(const Vec& s) {
    BigRat prev(0), cur(1);
    for (const BigRat& x : s) {
        BigRat next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Exhaustive integer-box enumeration by odometer, classified by the oracle.
// Returns entry vectors (lexicographically sorted by construction).
inline std::vector<std::vector<long>> odometer_hits(std::size_t n, long lo, long hi,
                                                    std::optional<int> lambda_filter) {
    std::vector<std::vector<long>> hits;
    std::vector<long> digits(n, lo);
    while (true) {
        Vec v;
        for (long x : digits) v.push_back(BigRat(x));
        std::optional<int> lam = oracle_classify(v);
        if (lam && (!lambda_filter || *lam == *lambda_filter)) hits.push_back(digits);
        std::size_t pos = n;
        while (pos > 0) {
            if (digits[pos - 1] < hi) {
                ++digits[pos - 1];
                std::fill(digits.begin() + static_cast<long>(pos), digits.end(), lo);
                break;
            }
            --pos;
        }
        if (pos == 0) break;
    }
    return hits;
}

inline std::vector<long> random_entries(std::mt19937_64& rng, std::size_t len, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<long> v(len);
    for (long& x : v) x = dist(rng);
    return v;
}

}  // namespace oracles
