#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "updown/formal_vector.hpp"
#include "updown/structure.hpp"

namespace updown {

/// The commutation-condition ladder, strongest first. NONE means some
/// object is not an eigenvector of [D,U] on the examined levels.
enum class CommutationKind { ACC, LCC, SCC, WCC, NONE };

[[nodiscard]] const char* commutation_kind_name(CommutationKind k);

/// Per-object eigenvalue data for [D,U] and the strongest condition
/// consistent with the truncation. Objects at max_level are excluded
/// (U is truncated there), so every claim is "consistent through
/// verified_through_level", never proved beyond it.
struct CommutatorReport {
    CommutationKind kind = CommutationKind::NONE;
    int verified_through_level = 0;

    /// eigenvalue per object; nullopt = not an eigenvector.
    std::map<ObjectKey, std::optional<Rational>> epsilon;

    Rational acc_r;                                  // ACC
    Rational lcc_a, lcc_b;                           // LCC: eps = a*level + b
    std::vector<std::optional<Rational>> level_r;    // SCC: r_i per level (empty levels -> nullopt)

    std::optional<ObjectKey> counterexample;         // NONE: first non-eigenvector
    FormalVector counterexample_image;               // its (DU-UD) expansion

    [[nodiscard]] bool at_least(CommutationKind k) const {
        return static_cast<int>(kind) <= static_cast<int>(k);
    }
    [[nodiscard]] std::string summary() const;
};

/// Computes (DU-UD)p exactly for every object of levels 0..max_level-1 and
/// fits constant / affine / per-level / per-object eigenvalue patterns.
/// Pre: max_level >= 2.
[[nodiscard]] CommutatorReport commutator_classify(const RankedStructure& S);

/// Documented closed form for the eigenvalue of one family's objects, or
/// ArgumentError when the family has none (necklaces with c >= 2).
[[nodiscard]] Rational epsilon_closed_form(const FamilySpec& spec, const ObjectKey& p);

struct FormulaCheckResult {
    bool all_pass = true;
    std::optional<ObjectKey> first_mismatch;
    Rational measured, predicted;  // set on mismatch
};

/// Per-object comparison of measured eigenvalues against the family's
/// documented closed form.
[[nodiscard]] FormulaCheckResult epsilon_formula_check(const RankedStructure& S,
                                                       const CommutatorReport& report);

/// Left side of the local eigenvalue identity at c: the u*d sum over covers
/// of c minus the u*d sum over objects covered by c. Pre: |c| < max_level.
[[nodiscard]] Rational esum_check(const RankedStructure& S, const ObjectKey& c);

struct WordEvaluation {
    Rational value;                      // <w 0^, p>
    std::optional<Rational> prediction;  // product formula under an SCC certificate
    [[nodiscard]] bool matches() const { return !prediction || *prediction == value; }
};

/// Evaluates a U/D word at 0^ against target p. The word acts rightmost
/// letter first; it must be a valid p-word (letter counts balance to |p|
/// and no suffix has more D than U). With an SCC certificate the product
/// formula d(0^;p) * prod (r_0+...+r_{c_i}) is evaluated alongside.
[[nodiscard]] WordEvaluation valid_word_evaluate(const RankedStructure& S, const std::string& word,
                                                 const ObjectKey& p,
                                                 const CommutatorReport* scc = nullptr);

struct IdentityCheck {
    bool holds = true;
    Rational lhs, rhs;
    std::string label;
};

/// Chain-weight identity for SCC structures: the d(p;q)u(0^;q) sum at rank
/// |p|+a against u(0^;p) times the r-prefix-sum product.
/// Pre: report certifies SCC; |p| + a <= max_level.
[[nodiscard]] IdentityCheck prop_weight_sum(const RankedStructure& S,
                                            const CommutatorReport& report, const ObjectKey& p,
                                            int a);

/// The level-1/2/3 weight identities that hold under the WCC alone.
/// Pre: report certifies WCC through level 3 (max_level >= 4).
[[nodiscard]] std::vector<IdentityCheck> wcc_level_identities(const RankedStructure& S,
                                                              const CommutatorReport& report);

/// Number of saturated arrow-chains from p to q, counting arrows between
/// adjacent objects as u distinguishable choices, by explicit enumeration.
/// Pre: S unilateral, |q| > |p|.
[[nodiscard]] BigInt chain_count(const RankedStructure& S, const ObjectKey& p, const ObjectKey& q);

}  // namespace updown
