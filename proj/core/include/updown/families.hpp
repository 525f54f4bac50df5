#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "updown/object_key.hpp"
#include "updown/structure.hpp"

namespace updown {

/// Level enumeration, automorphism orders and covering multiplicities for
/// one example family. Generators are pure and stateless given their
/// parameters; enumerate_level output is canonical, duplicate-free and
/// sorted by encoding.
class ExampleGenerator {
public:
    virtual ~ExampleGenerator() = default;

    [[nodiscard]] virtual FamilySpec spec() const = 0;
    [[nodiscard]] virtual int level_cap() const = 0;

    /// The canonical objects of level n, sorted; level 0 is always 0^.
    /// Throws ResourceError above the cap unless `force`.
    [[nodiscard]] virtual std::vector<ObjectKey> enumerate_level(int n) const = 0;

    /// |Aut(p)|; ArgumentError for objects not generated by this family.
    [[nodiscard]] virtual BigInt aut_order(const ObjectKey& p) const = 0;

    /// All covers q of p with their records; u,d >= 1 and
    /// u|Aut(q)| == d|Aut(p)| per record.
    [[nodiscard]] virtual std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(
        const ObjectKey& p) const = 0;

    [[nodiscard]] virtual bool has_hom_oracle() const { return false; }

    /// |Hom(p,q)| for |q| = |p|+1, by brute force over the family's
    /// morphism definition. ArgumentError for non-adjacent levels.
    [[nodiscard]] virtual BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const;

    /// Re-canonicalization is the identity on p's encoding.
    [[nodiscard]] virtual bool is_canonical(const ObjectKey& p) const = 0;

protected:
    void check_owned(const ObjectKey& p) const;
};

struct FamilyParams {
    std::optional<int> n;
    std::optional<int> c;
};

/// Factory for the family generators that are realized directly (everything
/// except subsets/monomials, whose production path is a product power; their
/// direct generators are still available here as cross-check oracles).
/// `force` lifts the documented level cap.
[[nodiscard]] std::unique_ptr<ExampleGenerator> make_generator(Family family,
                                                               const FamilyParams& params = {},
                                                               bool force = false);

/// Default truncation depth per family.
[[nodiscard]] int default_level_cap(Family family);

}  // namespace updown
