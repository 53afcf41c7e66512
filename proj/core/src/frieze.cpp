#include "quiddity/frieze.hpp"

#include <algorithm>
#include <map>

namespace quiddity {

Scalar continuant(const std::vector<Scalar>& s) {
    Scalar prev(0), cur(1);  // d_{-1}, d_0
    for (const Scalar& x : s) {
        Scalar next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

FriezePattern::FriezePattern(Cycle quiddity, int periods, std::vector<std::vector<Scalar>> rows)
    : quiddity_(std::move(quiddity)), periods_(periods), rows_(std::move(rows)) {
    if (periods_ < 1) throw std::invalid_argument("FriezePattern: periods must be positive");
    if (rows_.size() != static_cast<size_t>(quiddity_.length() + 1))
        throw std::invalid_argument("FriezePattern: expected rows 0..n");
    for (const auto& row : rows_)
        if (row.size() != static_cast<size_t>(columns()))
            throw std::invalid_argument("FriezePattern: ragged row");
}

const Scalar& FriezePattern::at(int r, int i) const {
    if (r < 0 || r > n() || i < 0 || i >= columns())
        throw std::out_of_range("FriezePattern::at: (" + std::to_string(r) + "," +
                                std::to_string(i) + ") outside rows 0.." + std::to_string(n()) +
                                " x cols 0.." + std::to_string(columns() - 1));
    return rows_[static_cast<size_t>(r)][static_cast<size_t>(i)];
}

void FriezePattern::set_entry(int r, int i, Scalar v) {
    at(r, i);  // bounds check
    rows_[static_cast<size_t>(r)][static_cast<size_t>(i)] = std::move(v);
}

FriezePattern build_frieze(const Cycle& c, int periods) {
    if (periods < 1) throw std::invalid_argument("build_frieze: periods must be positive");
    if (classify(c) != std::optional<Lambda>(Lambda::Minus))
        throw std::invalid_argument("build_frieze: " + c.str() + " is not a (-1)-quiddity cycle");
    const int n = c.length(), cols = periods * n;
    std::vector<std::vector<Scalar>> rows(static_cast<size_t>(n + 1),
                                          std::vector<Scalar>(static_cast<size_t>(cols)));
    for (int i = 0; i < cols; ++i) rows[1][static_cast<size_t>(i)] = Scalar(1);
    // Row recurrence of the continuant: appending c_{i+r-2} to the span.
    for (int r = 2; r <= n; ++r)
        for (int i = 0; i < cols; ++i)
            rows[static_cast<size_t>(r)][static_cast<size_t>(i)] =
                c[(i + r - 2) % n] * rows[static_cast<size_t>(r - 1)][static_cast<size_t>(i)] -
                rows[static_cast<size_t>(r - 2)][static_cast<size_t>(i)];
    return FriezePattern(c, periods, std::move(rows));
}

std::string FriezeReport::str() const {
    if (ok()) return "ok: no violations";
    std::string out = std::to_string(violations.size()) + " violation(s)";
    for (const FriezeViolation& v : violations)
        out += "\n  " + v.kind + " at row " + std::to_string(v.row) + ", col " +
               std::to_string(v.col) + ": " + v.detail;
    return out;
}

FriezeReport validate_frieze(const FriezePattern& p) {
    FriezeReport rep;
    const int n = p.n(), cols = p.columns();
    const Scalar zero(0), one(1);
    auto add = [&](const char* kind, int r, int c, std::string detail) {
        rep.violations.push_back(FriezeViolation{kind, r, c, std::move(detail)});
    };

    std::map<int, Scalar> border{{0, zero}, {1, one}, {n - 1, one}, {n, zero}};
    for (const auto& [r, expected] : border)
        for (int i = 0; i < cols; ++i)
            if (p.at(r, i) != expected)
                add("border", r, i, "entry " + p.at(r, i).str() + ", expected " + expected.str());

    for (int i = 0; i < cols; ++i)
        if (p.at(2, i) != p.quiddity()[i % n])
            add("quiddity-row", 2, i,
                "entry " + p.at(2, i).str() + ", expected " + p.quiddity()[i % n].str());

    for (int r = 0; r <= n; ++r)
        for (int i = 0; i + n < cols; ++i)
            if (p.at(r, i) != p.at(r, i + n))
                add("period", r, i,
                    "entry " + p.at(r, i).str() + " differs from column " + std::to_string(i + n));

    // Diamond around (r, j): west (r,j), east (r,j+1), north (r-1,j+1),
    // south (r+1,j); the stagger puts north and south between west and east.
    for (int r = 1; r <= n - 1; ++r)
        for (int j = 0; j + 1 < cols; ++j) {
            Scalar minor = p.at(r, j) * p.at(r, j + 1) - p.at(r - 1, j + 1) * p.at(r + 1, j);
            if (minor != one) add("diamond", r, j, "2x2 minor is " + minor.str());
        }

    // Tilted 3x3 block M[a][b] = at(r+b-a, j+a); fits for 2 <= r <= n-2.
    for (int r = 2; r <= n - 2; ++r)
        for (int j = 0; j + 2 < cols; ++j) {
            Scalar m[3][3];
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) m[a][b] = p.at(r + b - a, j + a);
            Scalar det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            if (det != zero) add("tame", r, j, "3x3 minor is " + det.str());
        }
    return rep;
}

namespace {

std::string render_ascii(const FriezePattern& p) {
    const int n = p.n(), cols = p.columns();
    size_t cell = 1;
    for (int r = 0; r <= n; ++r)
        for (int i = 0; i < cols; ++i) cell = std::max(cell, p.at(r, i).str().size());
    const size_t stride = cell + 2;

    size_t label_width = 0;
    std::vector<std::string> labels;
    for (int r = 0; r <= n; ++r) {
        labels.push_back("row " + std::to_string(r) + ":");
        label_width = std::max(label_width, labels.back().size());
    }

    std::string out;
    for (int r = 0; r <= n; ++r) {
        std::string line = labels[static_cast<size_t>(r)];
        line += std::string(label_width - line.size() + 2, ' ');
        if (r % 2 == 1) line += std::string(stride / 2, ' ');
        for (int i = 0; i < cols; ++i) {
            std::string s = p.at(r, i).str();
            if (i) line += "  ";
            line += std::string(cell - s.size(), ' ') + s;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_csv(const FriezePattern& p) {
    std::string out;
    for (int r = 0; r <= p.n(); ++r) {
        std::string line = r % 2 == 1 ? "," : "";
        for (int i = 0; i < p.columns(); ++i) {
            if (i) line += ',';
            line += p.at(r, i).str();
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace

std::string render(const FriezePattern& p, FriezeFormat format) {
    switch (format) {
        case FriezeFormat::Ascii:
            return render_ascii(p);
        case FriezeFormat::Csv:
            return render_csv(p);
    }
    throw std::invalid_argument("render: unknown format");
}

}  // namespace quiddity
