#pragma once

#include <json.hpp>

#include "updown/build.hpp"
#include "updown/identities.hpp"
#include "updown/verify.hpp"

namespace updown {

using OrderedJson = nlohmann::ordered_json;

struct FamilyRunConfig {
    Family family = Family::young;
    FamilyParams params;
    int max_level = 0;  // 0 = family default cap
    bool force = false;
};

/// Hom oracle backed by the family's direct generator, when it has one.
[[nodiscard]] HomOracle family_hom_oracle(Family family, const FamilyParams& params);

[[nodiscard]] OrderedJson classification_to_json(const CommutatorReport& report);

struct VerifyRun {
    OrderedJson json;
    bool pass = false;
};

/// The full verify pipeline for one family: structural checks, ratio law,
/// extended-multiplicity integrality, commutator classification against the
/// documented eigenvalue form, local eigenvalue sums, the WCC level
/// identities, and SCC weight-sum and word spot checks where the
/// certificate allows. Output is deterministic: identical configs produce
/// byte-identical JSON.
[[nodiscard]] VerifyRun run_family_verify(const FamilyRunConfig& config);

/// Structure accessor used by the CLI and the acceptance suite.
[[nodiscard]] RankedStructure build_for(const FamilyRunConfig& config);

}  // namespace updown
