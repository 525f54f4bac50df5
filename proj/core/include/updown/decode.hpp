#pragma once

#include <string>

#include "updown/cover.hpp"

namespace updown {

/// Which named combinatorial objects a family's universal-cover chains
/// decode to. The kingman entries refer to the chains of the up- and
/// down-quotient respectively.
enum class DecodeFamily {
    young,         // standard Young tableaux
    kingman_up,    // ordered set partitions, sizes decreasing, ties by max
    kingman_down,  // sequences with weakly decreasing value multiplicities
    compositions,  // Cayley permutations
    planar_trees,  // multiset permutations of {1,1,...,n,n}
};

[[nodiscard]] DecodeFamily decode_family_from_name(const std::string& name);
[[nodiscard]] const char* decode_family_name(DecodeFamily f);

/// Decodes a cover chain into the text form of its named combinatorial
/// object. The decoded object projects back to the chain's endpoint, and
/// decoding is injective level by level.
/// Throws UnsupportedError for constructions with no known description
/// (the down-quotient of rooted trees).
[[nodiscard]] std::string decode_cover(DecodeFamily family, const ChainObject& chain);

}  // namespace updown
