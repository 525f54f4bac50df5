#pragma once

// Independent counting and enumeration oracles used to freeze expected
// values in the tests. Everything here recomputes from first principles
// (recurrences, Burnside sums, brute-force filters) and never calls into
// the production enumeration or operator paths it checks.

#include <set>
#include <string>
#include <vector>

#include "updown/types.hpp"

namespace oracles {

using updown::BigInt;

/// Partition numbers p(n) by the classical two-parameter recurrence.
[[nodiscard]] BigInt partition_count(int n);

/// Catalan numbers by the convolution recurrence.
[[nodiscard]] BigInt catalan(int n);

[[nodiscard]] BigInt binomial(int n, int k);

/// Necklace counts (1/m) * sum over d|m of phi(d) c^(m/d).
[[nodiscard]] BigInt necklace_count(int m, int c);

/// Rooted trees on n non-root vertices (so 1, 1, 2, 4, 9, ...) by the
/// divisor-sum recurrence.
[[nodiscard]] BigInt rooted_tree_count(int n);

/// Involution numbers I(n) = I(n-1) + (n-1) I(n-2).
[[nodiscard]] BigInt involutions(int n);

/// All standard Young tableaux with n cells, as labels "[[1,2],[3]]",
/// enumerated by direct backtracking over row fill heights.
[[nodiscard]] std::set<std::string> all_syt_labels(int n);

/// All Cayley permutations of length n, as labels "[1,2,1]".
[[nodiscard]] std::set<std::string> all_cayley_labels(int n);

/// All permutations of the multiset {1,1,...,n,n} satisfying: if a_i > a_j
/// with i < j then some k < j, k != i has a_k = a_i. Labels "[1,2,2,1]".
[[nodiscard]] std::set<std::string> all_multiset_perm_labels(int n);

/// All set partitions of [n], each ordered canonically (sizes weakly
/// decreasing, equal sizes by increasing maximum), labels "[{1,3},{2}]".
[[nodiscard]] std::set<std::string> all_ordered_set_partition_labels(int n);

/// All length-n sequences over positive integers with weakly decreasing
/// value multiplicities, labels "[1,2,1]".
[[nodiscard]] std::set<std::string> all_decreasing_multiplicity_labels(int n);

/// Root-preserving automorphisms of a rooted tree in nested-parentheses
/// encoding, counted by brute force over vertex permutations.
[[nodiscard]] BigInt brute_force_tree_aut(const std::string& enc);

/// Permutations of the part list fixing the part values.
[[nodiscard]] BigInt brute_force_partition_aut(const std::vector<int>& parts);

}  // namespace oracles
