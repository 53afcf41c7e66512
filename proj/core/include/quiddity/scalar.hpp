#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quiddity {

/// Thrown when a cycle entry (or factor entry) falls outside the ring
/// subset a search was restricted to.
struct DomainViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Integer = mpz_class;

/**
 * Exact rational number. Always kept in normalized form: denominator >= 1
 * and gcd(|numerator|, denominator) = 1; zero is 0/1. Equality is structural
 * equality of normalized forms, ordering is numeric.
 *
 * Text format: `[-]digits[/digits]`, e.g. `-3`, `3/2`. No whitespace, no
 * leading `+`, nonzero denominator.
 */
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(const Integer& n) : v_(n) {}
    Scalar(const Integer& num, const Integer& den);

    static Scalar parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }

    std::string str() const { return v_.get_str(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws std::domain_error on /0
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Scalar& o) const;

private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Ring subsets the cycle algebra is parameterized over.
enum class DomainKind {
    Integers,             // Z
    Rationals,            // Q
    NonNegativeIntegers,  // {s in Z : s >= 0}
    PositiveIntegers,     // {s in Z : s >= 1}
    BoundedIntegers,      // {s in Z : |s| <= bound}
};

/// A decidable-membership subset of Q. Flag syntax: `z`, `q`, `nat0`,
/// `nat1`, `zb:<B>`.
class DomainSpec {
public:
    static DomainSpec integers() { return DomainSpec(DomainKind::Integers, 0); }
    static DomainSpec rationals() { return DomainSpec(DomainKind::Rationals, 0); }
    static DomainSpec nonnegative_integers() { return DomainSpec(DomainKind::NonNegativeIntegers, 0); }
    static DomainSpec positive_integers() { return DomainSpec(DomainKind::PositiveIntegers, 0); }
    static DomainSpec bounded_integers(const Integer& bound);

    static DomainSpec parse(std::string_view flag);

    DomainKind kind() const { return kind_; }
    const Integer& bound() const { return bound_; }

    bool contains(const Scalar& s) const;

    /// True when the subset itself is finite (only `zb:<B>`).
    bool finite() const { return kind_ == DomainKind::BoundedIntegers; }

    std::string str() const;

    bool operator==(const DomainSpec& o) const = default;

private:
    DomainSpec(DomainKind kind, Integer bound) : kind_(kind), bound_(std::move(bound)) {}
    DomainKind kind_;
    Integer bound_;
};

}  // namespace quiddity
