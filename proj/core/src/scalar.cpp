#include "quiddity/scalar.hpp"

namespace quiddity {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Scalar::Scalar(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    v_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    std::string_view num = rest, den;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = rest.substr(0, slash);
        den = rest.substr(slash + 1);
        if (!all_digits(den))
            throw std::invalid_argument("Scalar: malformed denominator in '" + std::string(text) + "'");
    }
    if (!all_digits(num))
        throw std::invalid_argument("Scalar: malformed number '" + std::string(text) + "'");

    Integer n(std::string(num), 10);
    if (negative) n = -n;
    if (den.empty()) return Scalar(n);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("Scalar: zero denominator in '" + std::string(text) + "'");
    return Scalar(n, d);
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_)); }

Scalar Scalar::operator+(const Scalar& o) const { return Scalar(mpq_class(v_ + o.v_)); }

Scalar Scalar::operator-(const Scalar& o) const { return Scalar(mpq_class(v_ - o.v_)); }

Scalar Scalar::operator*(const Scalar& o) const { return Scalar(mpq_class(v_ * o.v_)); }

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.v_ == 0) throw std::domain_error("Scalar: division by zero");
    return Scalar(mpq_class(v_ / o.v_));
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    int c = cmp(v_, o.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

DomainSpec DomainSpec::bounded_integers(const Integer& bound) {
    if (bound < 0) throw std::invalid_argument("DomainSpec: negative bound");
    return DomainSpec(DomainKind::BoundedIntegers, bound);
}

DomainSpec DomainSpec::parse(std::string_view flag) {
    if (flag == "z") return integers();
    if (flag == "q") return rationals();
    if (flag == "nat0") return nonnegative_integers();
    if (flag == "nat1") return positive_integers();
    if (flag.starts_with("zb:")) {
        std::string_view b = flag.substr(3);
        bool ok = !b.empty();
        for (char c : b)
            if (c < '0' || c > '9') ok = false;
        if (!ok) throw std::invalid_argument("DomainSpec: malformed bound in '" + std::string(flag) + "'");
        return bounded_integers(Integer(std::string(b), 10));
    }
    throw std::invalid_argument("DomainSpec: unknown domain '" + std::string(flag) +
                                "' (expected z, q, nat0, nat1 or zb:<B>)");
}

bool DomainSpec::contains(const Scalar& s) const {
    switch (kind_) {
        case DomainKind::Rationals:
            return true;
        case DomainKind::Integers:
            return s.is_integer();
        case DomainKind::NonNegativeIntegers:
            return s.is_integer() && s.numerator() >= 0;
        case DomainKind::PositiveIntegers:
            return s.is_integer() && s.numerator() >= 1;
        case DomainKind::BoundedIntegers:
            return s.is_integer() && abs(s.numerator()) <= bound_;
    }
    return false;
}

std::string DomainSpec::str() const {
    switch (kind_) {
        case DomainKind::Integers: return "z";
        case DomainKind::Rationals: return "q";
        case DomainKind::NonNegativeIntegers: return "nat0";
        case DomainKind::PositiveIntegers: return "nat1";
        case DomainKind::BoundedIntegers: return "zb:" + bound_.get_str();
    }
    return "?";
}

}  // namespace quiddity
