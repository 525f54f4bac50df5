#pragma once

#include <string>

#include "updown/cover.hpp"
#include "updown/structure.hpp"

namespace updown {

/// Hasse diagram in DOT form: one rank row per level, nodes labeled with
/// the canonical encoding and aut order, edges labeled "u=_,d=_".
[[nodiscard]] std::string structure_to_dot(const RankedStructure& S, const std::string& name);

/// Cover Hasse diagram with fiber coloring: chains over the same base
/// object share a fill color.
[[nodiscard]] std::string cover_to_dot(const CoveringMapData& map, const std::string& name);

}  // namespace updown
