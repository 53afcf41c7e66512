#include "quiddity/dihedral.hpp"

#include <set>

namespace quiddity {

namespace {

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

DihedralElem::DihedralElem(int n, int rot, bool reflect) : n_(n), rot_(0), reflect_(reflect) {
    if (n < 1) throw std::invalid_argument("DihedralElem: n must be positive");
    rot_ = mod(rot, n);
}

int DihedralElem::index_image(int i) const {
    return reflect_ ? mod(rot_ - i, n_) : mod(rot_ + i, n_);
}

DihedralElem DihedralElem::inverse() const {
    // Reflections are involutions; a rotation inverts to the opposite rotation.
    return reflect_ ? *this : DihedralElem(n_, -rot_, false);
}

std::string DihedralElem::str() const {
    return "rot=" + std::to_string(rot_) + ",reflect=" + (reflect_ ? "1" : "0") +
           ",n=" + std::to_string(n_);
}

DihedralElem DihedralElem::parse(std::string_view text) {
    int rot = -1, n = -1, reflect = -1;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view piece =
            comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
        size_t eq = piece.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("DihedralElem: malformed '" + std::string(text) + "'");
        std::string_view key = piece.substr(0, eq), val = piece.substr(eq + 1);
        int parsed = 0;
        for (char ch : val) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("DihedralElem: malformed '" + std::string(text) + "'");
            parsed = parsed * 10 + (ch - '0');
        }
        if (val.empty()) throw std::invalid_argument("DihedralElem: malformed '" + std::string(text) + "'");
        if (key == "rot") rot = parsed;
        else if (key == "reflect") reflect = parsed;
        else if (key == "n") n = parsed;
        else throw std::invalid_argument("DihedralElem: unknown field in '" + std::string(text) + "'");
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (rot < 0 || n < 1 || (reflect != 0 && reflect != 1))
        throw std::invalid_argument("DihedralElem: malformed '" + std::string(text) + "'");
    return DihedralElem(n, rot, reflect == 1);
}

DihedralElem compose(const DihedralElem& f, const DihedralElem& g) {
    if (f.n() != g.n()) throw std::invalid_argument("compose: group size mismatch");
    // g(f(i)) = g.rot + e_g*(f.rot + e_f*i) with e = -1 on reflection.
    int eg = g.reflect() ? -1 : 1;
    return DihedralElem(f.n(), g.rot() + eg * f.rot(), f.reflect() != g.reflect());
}

std::vector<DihedralElem> dihedral_elements(int n) {
    std::vector<DihedralElem> out;
    out.reserve(static_cast<size_t>(2 * n));
    for (int rot = 0; rot < n; ++rot) {
        out.emplace_back(n, rot, false);
        out.emplace_back(n, rot, true);
    }
    return out;
}

Cycle apply(const DihedralElem& sigma, const Cycle& c) {
    if (sigma.n() != c.length())
        throw std::invalid_argument("apply: group acts on " + std::to_string(sigma.n()) +
                                    " points but cycle has length " + std::to_string(c.length()));
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(c.length()));
    for (int i = 0; i < c.length(); ++i) out.push_back(c[sigma.index_image(i)]);
    return Cycle(std::move(out));
}

std::vector<Cycle> orbit(const Cycle& c) {
    std::set<Cycle> images;
    for (const DihedralElem& sigma : dihedral_elements(c.length())) images.insert(apply(sigma, c));
    return {images.begin(), images.end()};
}

std::optional<DihedralElem> equivalence_witness(const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return std::nullopt;
    for (const DihedralElem& sigma : dihedral_elements(b.length()))
        if (apply(sigma, b) == a) return sigma;
    return std::nullopt;
}

CanonicalForm canonical_form(const Cycle& c) {
    std::optional<CanonicalForm> best;
    for (const DihedralElem& sigma : dihedral_elements(c.length())) {
        Cycle image = apply(sigma, c);
        if (!best || image < best->cycle) best = CanonicalForm{std::move(image), sigma};
    }
    return *best;
}

}  // namespace quiddity
