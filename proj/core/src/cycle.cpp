#include "quiddity/cycle.hpp"

#include <algorithm>

namespace quiddity {

std::optional<Lambda> lambda_parse(std::string_view text) {
    if (text == "+1" || text == "1") return Lambda::Plus;
    if (text == "-1") return Lambda::Minus;
    return std::nullopt;
}

Mat2 Mat2::identity() { return Mat2{Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
}

Mat2 Mat2::times_generator(const Scalar& x) const {
    return Mat2{m11 * x + m12, -m11, m21 * x + m22, -m21};
}

Scalar Mat2::det() const { return m11 * m22 - m12 * m21; }

Cycle::Cycle(std::vector<Scalar> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("Cycle: empty sequence");
}

Cycle::Cycle(std::initializer_list<long> ints) {
    if (ints.size() == 0) throw std::invalid_argument("Cycle: empty sequence");
    entries_.reserve(ints.size());
    for (long v : ints) entries_.emplace_back(v);
}

Cycle Cycle::parse(std::string_view text) {
    std::vector<Scalar> entries;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        while (!piece.empty() && (piece.front() == ' ' || piece.front() == '\t')) piece.remove_prefix(1);
        while (!piece.empty() && (piece.back() == ' ' || piece.back() == '\t')) piece.remove_suffix(1);
        entries.push_back(Scalar::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Cycle(std::move(entries));
}

bool Cycle::in_domain(const DomainSpec& d) const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const Scalar& s) { return d.contains(s); });
}

std::string Cycle::str() const {
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += entries_[i].str();
    }
    return out;
}

std::strong_ordering Cycle::operator<=>(const Cycle& o) const {
    return std::lexicographical_compare_three_way(entries_.begin(), entries_.end(),
                                                  o.entries_.begin(), o.entries_.end());
}

Mat2 generator_matrix(const Scalar& x) { return Mat2{x, Scalar(-1), Scalar(1), Scalar(0)}; }

Mat2 cycle_matrix(const Cycle& c) {
    Mat2 m = Mat2::identity();
    for (const Scalar& x : c.entries()) m = m.times_generator(x);
    return m;
}

std::optional<Lambda> classify_matrix(const Mat2& m) {
    if (!m.m12.is_zero() || !m.m21.is_zero() || m.m11 != m.m22) return std::nullopt;
    if (m.m11 == Scalar(1)) return Lambda::Plus;
    if (m.m11 == Scalar(-1)) return Lambda::Minus;
    return std::nullopt;
}

std::optional<Lambda> classify(const Cycle& c) { return classify_matrix(cycle_matrix(c)); }

}  // namespace quiddity
