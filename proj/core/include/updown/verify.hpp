#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "updown/structure.hpp"

namespace updown {

struct CheckResult {
    std::string name;
    bool pass = true;
    bool skipped = false;
    std::string detail;  // first counterexample, or the skip notice
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back(CheckResult{std::move(name), pass, false, std::move(detail)});
    }
    void add_skipped(std::string name, std::string notice) {
        checks.push_back(CheckResult{std::move(name), true, true, std::move(notice)});
    }
};

using HomOracle = std::function<BigInt(const ObjectKey&, const ObjectKey&)>;

/// Structural checks on a truncation, each reported pass/fail with the
/// first counterexample:
///   (a) u|Aut(q)| == d|Aut(p)| at every covering record;
///   (b) two-step composition through every intermediate object, for u and
///       for d, against the operator-power route;
///   (c) adjointness <Up,q> == <p,Dq> on basis pairs of adjacent levels;
///   (d) with a hom oracle: recomputed |Hom(p,q)| divides exactly by both
///       automorphism orders and reproduces the stored u and d
///       (skipped with a notice when no oracle is given).
[[nodiscard]] VerificationReport verify_structure(const RankedStructure& S,
                                                  const HomOracle& oracle = nullptr);

}  // namespace updown
