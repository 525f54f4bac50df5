#pragma once

#include <utility>

#include "updown/formal_vector.hpp"
#include "updown/structure.hpp"

namespace updown {

/// U v = sum over covers with multiplicity u(p;p'). Every term of v must lie
/// strictly below max_level: applying U at the truncation boundary is an
/// error, not a silent zero, so commutator data never gets corrupted there.
[[nodiscard]] FormalVector up_apply(const RankedStructure& S, const FormalVector& v);

/// D v = sum over covered objects with multiplicity d(p';p); D(0^) = 0.
[[nodiscard]] FormalVector down_apply(const RankedStructure& S, const FormalVector& v);

/// <p,p'> = |Aut(p)| when p = p', 0 otherwise, extended bilinearly.
[[nodiscard]] Rational inner_product(const RankedStructure& S, const FormalVector& v,
                                     const FormalVector& w);

struct ExtendedMultiplicity {
    Rational u;
    Rational d;
};

/// Extended u(p;q), d(p;q) for |q| >= |p|, computed by operator powers
/// (never by hom enumeration across multiple levels). (0,0) when q is
/// unreachable from p.
[[nodiscard]] ExtendedMultiplicity extended_multiplicity(const RankedStructure& S,
                                                         const ObjectKey& p, const ObjectKey& q);

/// u(0^;q) for every realized object, one U-sweep per level.
/// Result[n] holds the level-n vector U^n(0^).
[[nodiscard]] std::vector<FormalVector> up_powers_from_zero(const RankedStructure& S);

}  // namespace updown
