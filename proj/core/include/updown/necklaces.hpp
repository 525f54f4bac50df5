#pragma once

#include <string>
#include <vector>

#include "updown/types.hpp"

namespace updown {

/// Necklaces are rotation classes of color strings over 'a'..; the canonical
/// representative is the lexicographically minimal rotation.
[[nodiscard]] std::string canonical_rotation(const std::string& beads);

/// Order of the rotation group fixing the string: m / (smallest period).
[[nodiscard]] BigInt necklace_aut_order(const std::string& beads);

/// |Hom| between the classes of two representative strings f (m beads) and
/// g (m+1 beads): injective maps h: Z/m -> Z/(m+1) that preserve colors and
/// cyclic order. Enumerated as (missed target position, start offset) pairs;
/// the count is representative independent.
[[nodiscard]] BigInt necklace_hom_count_reps(const std::string& f, const std::string& g);

/// All m-bead necklaces over c colors, canonical and sorted.
[[nodiscard]] std::vector<std::string> necklaces_of(int m, int c);

}  // namespace updown
