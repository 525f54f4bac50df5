#include "updown/product.hpp"

#include <algorithm>

namespace updown {

RankedStructure product_structure(const RankedStructure& A, const RankedStructure& B) {
    if (A.max_level() != B.max_level())
        throw ArgumentError("product_structure: factors must share max_level");
    const int L = A.max_level();
    FamilySpec spec;
    spec.family = Family::product;
    StructureBuilder builder(spec);

    auto pair_key = [&](const ObjectKey& a, const ObjectKey& b) {
        return ObjectKey{Family::product, a.level + b.level, a.encoding + "," + b.encoding};
    };

    for (int n = 0; n <= L; ++n) {
        std::vector<ObjectKey> objs;
        std::vector<BigInt> auts;
        for (int i = 0; i <= n; ++i) {
            const auto& la = A.level(i);
            const auto& lb = B.level(n - i);
            for (std::size_t ai = 0; ai < la.size(); ++ai)
                for (std::size_t bi = 0; bi < lb.size(); ++bi) {
                    objs.push_back(pair_key(la.objects[ai], lb.objects[bi]));
                    auts.push_back(la.aut_orders[ai] * lb.aut_orders[bi]);
                }
        }
        std::vector<std::size_t> order(objs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return objs[x].encoding < objs[y].encoding; });
        std::vector<ObjectKey> sorted_objs;
        std::vector<BigInt> sorted_auts;
        sorted_objs.reserve(objs.size());
        for (std::size_t i : order) {
            sorted_objs.push_back(objs[i]);
            sorted_auts.push_back(auts[i]);
        }
        builder.add_level(std::move(sorted_objs), std::move(sorted_auts));
    }

    // U(a,b) = (Ua, b) + (a, Ub): one product edge per factor edge.
    for (int n = 0; n < L; ++n) {
        for (int i = 0; i <= n; ++i) {
            const auto& la = A.level(i);
            const auto& lb = B.level(n - i);
            if (i < L)
                for (const UpEdge& e : A.up_edges(i))
                    for (std::size_t bi = 0; bi < lb.size(); ++bi) {
                        CoveringRecord rec;
                        rec.u = e.rec.u;
                        rec.d = e.rec.d;
                        if (e.rec.hom_count)
                            rec.hom_count = *e.rec.hom_count * lb.aut_orders[bi];
                        builder.add_covering(pair_key(la.objects[e.src], lb.objects[bi]),
                                             pair_key(A.level(i + 1).objects[e.dst], lb.objects[bi]),
                                             std::move(rec));
                    }
            if (n - i < L)
                for (const UpEdge& e : B.up_edges(n - i))
                    for (std::size_t ai = 0; ai < la.size(); ++ai) {
                        CoveringRecord rec;
                        rec.u = e.rec.u;
                        rec.d = e.rec.d;
                        if (e.rec.hom_count)
                            rec.hom_count = *e.rec.hom_count * la.aut_orders[ai];
                        builder.add_covering(pair_key(la.objects[ai], B.level(n - i).objects[e.src]),
                                             pair_key(la.objects[ai], B.level(n - i + 1).objects[e.dst]),
                                             std::move(rec));
                    }
        }
    }
    return builder.finish();
}

RankedStructure retag_family(const RankedStructure& S, FamilySpec spec) {
    StructureBuilder builder(spec);
    for (int n = 0; n <= S.max_level(); ++n) {
        const auto& lvl = S.level(n);
        std::vector<ObjectKey> objs;
        objs.reserve(lvl.size());
        for (const auto& o : lvl.objects) objs.push_back(ObjectKey{spec.family, o.level, o.encoding});
        builder.add_level(std::move(objs), lvl.aut_orders);
    }
    for (int n = 0; n < S.max_level(); ++n)
        for (const UpEdge& e : S.up_edges(n)) {
            const auto& p = S.level(n).objects[e.src];
            const auto& q = S.level(n + 1).objects[e.dst];
            builder.add_covering(ObjectKey{spec.family, p.level, p.encoding},
                                 ObjectKey{spec.family, q.level, q.encoding}, e.rec);
        }
    return builder.finish();
}

RankedStructure product_power(const RankedStructure& S, int n) {
    if (n < 1) throw ArgumentError("product_power requires n >= 1");
    FamilySpec spec;
    spec.family = Family::product;
    RankedStructure acc = retag_family(S, spec);
    for (int i = 1; i < n; ++i) acc = product_structure(acc, S);
    return acc;
}

}  // namespace updown
