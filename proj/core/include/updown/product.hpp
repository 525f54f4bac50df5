#pragma once

#include "updown/structure.hpp"

namespace updown {

/// Product category truncation: objects at level n are pairs (a, b) with
/// |a| + |b| = n, automorphism orders multiply, and the covers of (a, b)
/// are exactly (a', b) and (a, b') with multiplicities inherited from the
/// factor edge. Encodings are the factor encodings joined by ','.
/// Pre: A and B truncated to the same max_level.
[[nodiscard]] RankedStructure product_structure(const RankedStructure& A, const RankedStructure& B);

/// Same structure with every object re-tagged to `family` (used where a
/// family is implemented as a product power under its own tag).
[[nodiscard]] RankedStructure retag_family(const RankedStructure& S, FamilySpec spec);

/// n-fold product power of S under the product tag.
[[nodiscard]] RankedStructure product_power(const RankedStructure& S, int n);

}  // namespace updown
