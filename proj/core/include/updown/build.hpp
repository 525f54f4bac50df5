#pragma once

#include "updown/families.hpp"
#include "updown/structure.hpp"

namespace updown {

/// Drives a generator level by level into a RankedStructure holding all
/// objects of levels 0..max_level and every covering record between
/// adjacent realized levels, in deterministic order.
[[nodiscard]] RankedStructure build_truncation(const ExampleGenerator& gen, int max_level);

/// Production entry point per family. subsets(n) and monomials(n) are built
/// as product powers of two_chain and symmetric_chain and then re-tagged;
/// everything else runs its generator through build_truncation.
[[nodiscard]] RankedStructure make_structure(Family family, const FamilyParams& params,
                                             int max_level, bool force = false);

}  // namespace updown
