#pragma once

#include <string_view>

#include "quiddity/factor.hpp"

namespace quiddity {

/**
 * Canonical indented text form, one node per line:
 *     node cycle=<entries> lambda=<+1|-1> sigma=<rot=..,reflect=..,n=..>
 *       <left subtree>
 *       <right subtree>
 *     leaf cycle=<entries> lambda=<+1|-1> irreducible=true
 * Two-space indent per depth, newline-terminated. Serializing a parsed
 * serialization reproduces it byte for byte.
 */
std::string tree_to_text(const DecompositionTree& tree);

/// Parses the text form, checking recorded lambdas against classification
/// and every node equation cycle == apply(sigma, left (+) right).
/// Throws std::invalid_argument on malformed or inconsistent input.
DecompositionTreePtr tree_from_text(std::string_view text);

/**
 * Compact JSON with alphabetically ordered keys. Leaves are
 * {"cycle":[scalar strings],"irreducible":true,"kind":"leaf","lambda":+-1};
 * nodes add "left", "right" and "sigma":{"n":..,"reflect":..,"rot":..}.
 * Serializing a parsed serialization reproduces it byte for byte.
 */
std::string tree_to_json(const DecompositionTree& tree);

/// Parses the JSON form with the same consistency checks as tree_from_text.
DecompositionTreePtr tree_from_json(std::string_view text);

}  // namespace quiddity
