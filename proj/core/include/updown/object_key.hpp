#pragma once

#include <compare>
#include <string>
#include <vector>

#include "updown/types.hpp"

namespace updown {

/// The ten example families, plus the two synthetic tags produced by
/// constructions (products of structures, universal-cover chains).
enum class Family {
    two_chain,
    subsets,
    symmetric_chain,
    monomials,
    necklaces,
    young,
    kingman,
    compositions,
    planar_trees,
    rooted_trees,
    product,
    cover,
};

[[nodiscard]] const char* family_name(Family f);
[[nodiscard]] Family family_from_name(const std::string& name);  // throws ArgumentError

/// One object of one category: family tag, canonical byte encoding, rank.
/// The encoding is the canonical representative for its family; the level
/// always equals the rank recomputed from the encoding.
struct ObjectKey {
    Family family{};
    int level = 0;
    std::string encoding;

    friend bool operator==(const ObjectKey&, const ObjectKey&) = default;
    friend auto operator<=>(const ObjectKey& a, const ObjectKey& b) {
        if (auto c = a.level <=> b.level; c != 0) return c;
        if (auto c = a.encoding <=> b.encoding; c != 0) return c;
        return a.family <=> b.family;
    }
};

[[nodiscard]] std::string to_display(const ObjectKey& p);

}  // namespace updown
