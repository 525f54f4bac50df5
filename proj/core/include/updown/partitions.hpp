#pragma once

#include <string>
#include <vector>

#include "updown/types.hpp"

namespace updown {

/// Integer partitions as weakly decreasing part lists; canonical text
/// encoding joins parts with '+' ("3+1"), empty partition encodes as "".
using Partition = std::vector<int>;

[[nodiscard]] std::string encode_partition(const Partition& parts);
[[nodiscard]] Partition parse_partition(const std::string& enc);  // throws ArgumentError
[[nodiscard]] bool is_valid_partition(const Partition& parts);

[[nodiscard]] int partition_weight(const Partition& parts);

/// Number of parts equal to k.
[[nodiscard]] int multiplicity_of(const Partition& parts, int k);

/// All partitions of n, sorted by encoding.
[[nodiscard]] std::vector<Partition> partitions_of(int n);

/// All partitions mu covering lambda in Young's order (add a new part 1, or
/// increase one part k -> k+1 at the head of its run of equal parts).
[[nodiscard]] std::vector<Partition> partition_covers(const Partition& lambda);

/// Componentwise containment lambda_i <= mu_i.
[[nodiscard]] bool partition_contains(const Partition& mu, const Partition& lambda);

}  // namespace updown
