#pragma once

#include <string>
#include <vector>

#include "updown/types.hpp"

namespace updown {

/// Integer compositions (order significant), encoded with '|' ("1|2|1");
/// the empty composition encodes as "".
using Composition = std::vector<int>;

[[nodiscard]] std::string encode_composition(const Composition& parts);
[[nodiscard]] Composition parse_composition(const std::string& enc);

/// All compositions of n, sorted by encoding.
[[nodiscard]] std::vector<Composition> compositions_of(int n);

/// Positions q (1-based) such that the q-th part of J equals 1 and deleting
/// it yields I; these index the order-preserving injections I -> J that skip
/// one part. Empty when J does not insert a single 1 into I.
[[nodiscard]] std::vector<int> composition_insert_positions(const Composition& I,
                                                            const Composition& J);

}  // namespace updown
