#include "updown/operators.hpp"

namespace updown {

FormalVector up_apply(const RankedStructure& S, const FormalVector& v) {
    FormalVector out;
    for (const auto& [p, c] : v.terms()) {
        std::size_t i = S.index_of(p);
        if (p.level >= S.max_level())
            throw OutOfRangeError("up_apply: term at truncation boundary level " +
                                  std::to_string(p.level) + ": " + to_display(p));
        const auto& lvl_next = S.level(p.level + 1);
        auto edges = S.up_edges(p.level);
        for (std::size_t e : S.edges_from(p.level, i)) {
            const UpEdge& edge = edges[e];
            out.add_term(lvl_next.objects[edge.dst], c * Rational(edge.rec.u));
        }
    }
    return out;
}

FormalVector down_apply(const RankedStructure& S, const FormalVector& v) {
    FormalVector out;
    for (const auto& [p, c] : v.terms()) {
        std::size_t i = S.index_of(p);
        if (p.level == 0) continue;  // D(0^) = 0
        const auto& lvl_prev = S.level(p.level - 1);
        auto edges = S.up_edges(p.level - 1);
        for (std::size_t e : S.edges_into(p.level, i)) {
            const UpEdge& edge = edges[e];
            out.add_term(lvl_prev.objects[edge.src], c * Rational(edge.rec.d));
        }
    }
    return out;
}

Rational inner_product(const RankedStructure& S, const FormalVector& v, const FormalVector& w) {
    // Iterate over the smaller support.
    const FormalVector& a = v.size() <= w.size() ? v : w;
    const FormalVector& b = v.size() <= w.size() ? w : v;
    Rational acc = 0;
    for (const auto& [p, c] : a.terms()) {
        Rational cb = b.coeff(p);
        if (cb != 0) acc += c * cb * Rational(S.aut_order(p));
    }
    return acc;
}

ExtendedMultiplicity extended_multiplicity(const RankedStructure& S, const ObjectKey& p,
                                           const ObjectKey& q) {
    if (!S.contains(p)) throw ArgumentError("extended_multiplicity: unknown object " + to_display(p));
    if (!S.contains(q)) throw ArgumentError("extended_multiplicity: unknown object " + to_display(q));
    if (q.level < p.level)
        throw ArgumentError("extended_multiplicity requires |q| >= |p|");
    if (q.level == p.level) {
        if (p == q) return {1, 1};
        return {0, 0};
    }
    FormalVector v = FormalVector::basis(p);
    for (int l = p.level; l < q.level; ++l) v = up_apply(S, v);
    // <U^k p, q> = coeff_q * |Aut(q)|, so u = coeff_q and d = coeff_q*|Aut q|/|Aut p|.
    Rational cu = v.coeff(q);
    Rational cd = cu * Rational(S.aut_order(q)) / Rational(S.aut_order(p));
    return {cu, cd};
}

std::vector<FormalVector> up_powers_from_zero(const RankedStructure& S) {
    std::vector<FormalVector> out;
    out.reserve(static_cast<std::size_t>(S.max_level()) + 1);
    out.push_back(FormalVector::basis(S.zero_hat()));
    for (int n = 0; n < S.max_level(); ++n) out.push_back(up_apply(S, out.back()));
    return out;
}

}  // namespace updown
