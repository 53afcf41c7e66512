#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiddity/scalar.hpp"

namespace quiddity {

/// Classification value of a quiddity cycle: the cycle's matrix product is
/// lambda times the identity, with lambda restricted to {+1, -1}.
enum class Lambda : int { Plus = +1, Minus = -1 };

inline int lambda_value(Lambda l) { return static_cast<int>(l); }
inline Lambda operator-(Lambda l) { return l == Lambda::Plus ? Lambda::Minus : Lambda::Plus; }
inline Lambda operator*(Lambda a, Lambda b) { return a == b ? Lambda::Plus : Lambda::Minus; }
inline std::string lambda_str(Lambda l) { return l == Lambda::Plus ? "+1" : "-1"; }
std::optional<Lambda> lambda_parse(std::string_view text);  // "+1", "1", "-1"

/// 2x2 matrix of exact rationals, row-major. Products of generator matrices
/// always have determinant 1.
struct Mat2 {
    Scalar m11, m12, m21, m22;

    static Mat2 identity();
    Mat2 operator*(const Mat2& o) const;
    /// Right-multiply by the generator [[x,-1],[1,0]] without forming it.
    Mat2 times_generator(const Scalar& x) const;
    Scalar det() const;
    bool operator==(const Mat2& o) const = default;
};

/**
 * A finite, nonempty sequence of exact rationals. Raw cycles carry no
 * certification; `classify` decides whether the sequence is a lambda-quiddity
 * cycle. Indexing is 0-based in code.
 *
 * Text format: comma-separated scalars, e.g. `4,0,-3,-1,0,2,1`; whitespace
 * around commas is ignored.
 */
class Cycle {
public:
    explicit Cycle(std::vector<Scalar> entries);
    Cycle(std::initializer_list<long> ints);

    static Cycle parse(std::string_view text);

    int length() const { return static_cast<int>(entries_.size()); }
    const Scalar& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    bool in_domain(const DomainSpec& d) const;

    std::string str() const;

    bool operator==(const Cycle& o) const { return entries_ == o.entries_; }
    std::strong_ordering operator<=>(const Cycle& o) const;

private:
    std::vector<Scalar> entries_;
};

/// The generator matrix [[x,-1],[1,0]].
Mat2 generator_matrix(const Scalar& x);

/// Left-to-right product of the generator matrices of all entries.
Mat2 cycle_matrix(const Cycle& c);

/// Lambda with m == lambda * id, or nullopt.
std::optional<Lambda> classify_matrix(const Mat2& m);

/// Lambda with cycle_matrix(c) == lambda * id, or nullopt. Length-1 cycles
/// never classify (the generator has a -1 off the diagonal).
std::optional<Lambda> classify(const Cycle& c);

}  // namespace quiddity
