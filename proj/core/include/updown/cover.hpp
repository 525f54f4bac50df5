#pragma once

#include <map>

#include "updown/structure.hpp"
#include "updown/verify.hpp"

namespace updown {

/// Quotient with all automorphisms trivial and multiplicity u on every
/// record (hom count in the quotient equals u). Idempotent on unilateral
/// structures.
[[nodiscard]] RankedStructure up_quotient(const RankedStructure& S);

/// As up_quotient with d in place of u.
[[nodiscard]] RankedStructure down_quotient(const RankedStructure& S);

/// One step of a chain: the covered object reached and which of the
/// u distinguishable arrows was taken (0..u-1 under the canonical order).
struct ChainStep {
    ObjectKey target;
    int arrow_index = 0;
};

/// An object of the universal cover: a saturated chain of arrow choices
/// from 0^ upward.
struct ChainObject {
    std::vector<ChainStep> steps;

    [[nodiscard]] int level() const { return static_cast<int>(steps.size()); }
    [[nodiscard]] std::string encode() const;
};

struct CoveringMapData {
    RankedStructure total;
    RankedStructure base;
    std::map<ObjectKey, ObjectKey> projection;  // cover object -> base object
    std::map<ObjectKey, ChainObject> chains;    // cover object -> its chain
};

/// Universal cover of a unilateral structure: level-n objects are the
/// saturated arrow-chains from 0^; every object has exactly one incoming
/// covering with u = d = 1, and the projection sends a chain to the target
/// of its last arrow.
/// Pre: S unilateral (PreconditionError otherwise), max_level <= S.max_level().
[[nodiscard]] CoveringMapData universal_cover(const RankedStructure& S, int max_level);

/// Covering-map laws on multiplicity data: per cover object and base cover,
/// the fiber-summed multiplicities match the base record; the projection is
/// a level-preserving surjection; and each fiber over p has exactly
/// u(0^;p) objects.
[[nodiscard]] VerificationReport verify_covering(const CoveringMapData& map);

}  // namespace updown
