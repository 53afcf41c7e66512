#pragma once

#include "quiddity/cycle.hpp"

namespace quiddity {

/// Division-free tridiagonal recurrence d_{-1}=0, d_0=1,
/// d_j = s_j*d_{j-1} - d_{j-2}; returns d_{len(s)}. Empty input gives 1.
Scalar continuant(const std::vector<Scalar>& s);

/**
 * The staggered array associated to a (-1)-quiddity cycle of length n:
 * rows 0..n, each storing periods*n columns, with entry (r, i) sitting half
 * a column right of (r-1, i). Row 0 is all zeros, row 1 all ones, row 2
 * repeats the quiddity cycle, rows n-1 and n close the border with ones and
 * zeros; the width (count of nontrivial rows 2..n-2) is n-3. Every adjacent
 * 2x2 minor (west*east - north*south around a diamond) is 1 and every
 * adjacent 3x3 minor is 0.
 *
 * Entry (r, i) = continuant(c_i, ..., c_{i+r-2}) with 0-based indices mod n.
 */
class FriezePattern {
public:
    FriezePattern(Cycle quiddity, int periods, std::vector<std::vector<Scalar>> rows);

    const Cycle& quiddity() const { return quiddity_; }
    int periods() const { return periods_; }
    int n() const { return quiddity_.length(); }
    int row_count() const { return n() + 1; }
    int columns() const { return periods_ * n(); }
    int width() const { return n() - 3; }

    const Scalar& at(int r, int i) const;
    /// Overwrites one entry; exists so validation can be exercised on
    /// deliberately broken patterns.
    void set_entry(int r, int i, Scalar v);

private:
    Cycle quiddity_;
    int periods_;
    std::vector<std::vector<Scalar>> rows_;
};

/// Builds the pattern row by row via E(r,i) = c_{i+r-2}*E(r-1,i) - E(r-2,i).
/// Throws std::invalid_argument unless classify(c) is -1 and periods >= 1.
FriezePattern build_frieze(const Cycle& c, int periods);

struct FriezeViolation {
    std::string kind;  // border | quiddity-row | period | diamond | tame
    int row;
    int col;
    std::string detail;
};

struct FriezeReport {
    std::vector<FriezeViolation> violations;

    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Checks borders, the quiddity row, periodicity, all 2x2 diamond minors
/// and all 3x3 minors, exhaustively over the stored columns.
FriezeReport validate_frieze(const FriezePattern& p);

enum class FriezeFormat { Ascii, Csv };

/**
 * Ascii: labeled rows ("row 0".."row n"), odd rows indented by half a cell
 * to show the stagger. Csv: one line per row, scalars in text form, odd
 * rows starting with an empty cell to encode the half-column offset.
 */
std::string render(const FriezePattern& p, FriezeFormat format);

}  // namespace quiddity
