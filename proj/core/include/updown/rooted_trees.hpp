#pragma once

#include <string>
#include <vector>

#include "updown/types.hpp"

namespace updown {

/// Rooted tree given by its child list; isomorphism classes are identified
/// by the canonical nested-parentheses form: a node serializes as
/// "(" + concatenation of its children's serializations, sorted, + ")".
/// The one-vertex tree is "()" and has level 0 (= non-root vertex count).
struct RootedTree {
    std::vector<RootedTree> children;
};

/// Serialization of a tree whose children are already in canonical order.
[[nodiscard]] std::string encode_rooted_tree(const RootedTree& t);

/// Recursively sorts child lists; idempotent, and two inputs canonicalize to
/// equal encodings exactly when they are isomorphic as rooted trees.
[[nodiscard]] RootedTree canonicalize_rooted_tree(const RootedTree& raw);

[[nodiscard]] RootedTree parse_rooted_tree(const std::string& enc);

/// Non-root vertex count.
[[nodiscard]] int rooted_tree_size(const RootedTree& t);

/// |Aut| = product over child-isomorphism-classes of (multiplicity)! times
/// the child automorphism orders.
[[nodiscard]] BigInt rooted_tree_aut_order(const RootedTree& t);

/// Canonical encodings obtained by attaching a leaf at each vertex, one
/// entry per vertex (duplicates included; vertex order is root-first DFS).
[[nodiscard]] std::vector<std::string> attach_leaf_everywhere(const RootedTree& t);

/// Canonical encodings obtained by deleting each terminal edge, one entry
/// per leaf (duplicates included).
[[nodiscard]] std::vector<std::string> delete_each_leaf(const RootedTree& t);

/// |Hom(P,Q)|: injective root- and covering-preserving maps, counted by
/// recursive enumeration of child assignments. Intended for small trees.
[[nodiscard]] BigInt rooted_tree_hom_count(const RootedTree& P, const RootedTree& Q);

}  // namespace updown
