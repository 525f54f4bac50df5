#pragma once

#include <string>
#include <vector>

#include "updown/types.hpp"

namespace updown {

/// Planar rooted trees as Dyck words over 'U'/'D': all partial sums
/// nonnegative, total sum zero, level n = half the length.
[[nodiscard]] bool is_dyck_word(const std::string& w);

/// All Dyck words of semilength n, sorted.
[[nodiscard]] std::vector<std::string> dyck_words_of(int n);

/// Number of terminal vertices of the planar tree = occurrences of "UD".
[[nodiscard]] int dyck_leaf_count(const std::string& w);

/// Insert the pair "UD" at byte offset pos (0..len).
[[nodiscard]] std::string dyck_insert_pair(const std::string& w, int pos);

/// Offsets whose "UD" insertion into `w` yields `target`, ascending. These
/// index the adjacent-level morphisms w -> target (an order-preserving
/// injection missing two consecutive values).
[[nodiscard]] std::vector<int> dyck_insert_positions(const std::string& w,
                                                     const std::string& target);

}  // namespace updown
