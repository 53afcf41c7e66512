#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiddity/cycle.hpp"

namespace quiddity {

/**
 * Element of the dihedral group D_n acting on the index set {0,...,n-1}.
 * The index action is
 *     sigma(i) = (rot + i) mod n          when reflect is false,
 *     sigma(i) = (rot - i) mod n          when reflect is true,
 * and applying sigma to a cycle picks entry sigma(i) into slot i, so the
 * image is a cyclic rotation of the cycle or of its reversal. The pure
 * reflection (rot=0) fixes index 0.
 *
 * Rendered as `rot=<r>,reflect=<0|1>,n=<n>`.
 */
class DihedralElem {
public:
    DihedralElem(int n, int rot, bool reflect);
    static DihedralElem identity(int n) { return DihedralElem(n, 0, false); }

    int n() const { return n_; }
    int rot() const { return rot_; }
    bool reflect() const { return reflect_; }
    bool is_identity() const { return rot_ == 0 && !reflect_; }

    /// 0-based index action.
    int index_image(int i) const;

    DihedralElem inverse() const;

    std::string str() const;
    static DihedralElem parse(std::string_view text);

    bool operator==(const DihedralElem& o) const = default;

private:
    int n_;
    int rot_;  // in [0, n)
    bool reflect_;
};

/// Composition with apply(f, apply(g, c)) == apply(compose(f, g), c),
/// i.e. index map i -> g(f(i)). Both operands must share the same n.
DihedralElem compose(const DihedralElem& f, const DihedralElem& g);

/// All 2n elements in canonical order: rot ascending, reflect=false before
/// reflect=true at each rot. Every search in this library scans candidates
/// in this order, which makes reported witnesses deterministic.
std::vector<DihedralElem> dihedral_elements(int n);

/// The image c^sigma with (c^sigma)_i = c_{sigma(i)}. Requires sigma.n == length(c).
Cycle apply(const DihedralElem& sigma, const Cycle& c);

/// All distinct images of c under D_n, sorted; the size divides 2n.
std::vector<Cycle> orbit(const Cycle& c);

/// First sigma in canonical order with a == apply(sigma, b), or nullopt.
/// Always nullopt when lengths differ.
std::optional<DihedralElem> equivalence_witness(const Cycle& a, const Cycle& b);

struct CanonicalForm {
    Cycle cycle;          // lexicographically least orbit element
    DihedralElem witness; // cycle == apply(witness, input)
};

/// Deterministic orbit representative: the lexicographically smallest image,
/// with the first witness in canonical order that reaches it.
CanonicalForm canonical_form(const Cycle& c);

}  // namespace quiddity
