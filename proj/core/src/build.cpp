#include "updown/build.hpp"

#include "updown/product.hpp"

namespace updown {

RankedStructure build_truncation(const ExampleGenerator& gen, int max_level) {
    if (max_level < 0) throw ArgumentError("build_truncation: negative max_level");
    StructureBuilder builder(gen.spec());
    std::vector<std::vector<ObjectKey>> levels;
    for (int n = 0; n <= max_level; ++n) {
        std::vector<ObjectKey> objs = gen.enumerate_level(n);
        std::vector<BigInt> auts;
        auts.reserve(objs.size());
        for (const auto& p : objs) {
            if (!gen.is_canonical(p))
                throw InvariantError("generator emitted a non-canonical encoding: " + to_display(p));
            auts.push_back(gen.aut_order(p));
        }
        levels.push_back(objs);
        builder.add_level(std::move(objs), std::move(auts));
    }
    for (int n = 0; n < max_level; ++n)
        for (const auto& p : levels[static_cast<std::size_t>(n)])
            for (auto& [q, rec] : gen.coverings(p)) {
                if (!gen.is_canonical(q))
                    throw InvariantError("generator emitted a non-canonical cover: " + to_display(q));
                builder.add_covering(p, q, std::move(rec));
            }
    return builder.finish();
}

RankedStructure make_structure(Family family, const FamilyParams& params, int max_level,
                               bool force) {
    switch (family) {
        case Family::subsets: {
            if (!params.n) throw ArgumentError("subsets requires parameter n");
            if (*params.n < 1 || *params.n > 8) throw ArgumentError("subsets: n must be in 1..8");
            auto chain = make_generator(Family::two_chain, {}, force);
            RankedStructure base = build_truncation(*chain, max_level);
            RankedStructure power = product_power(base, *params.n);
            return retag_family(power, FamilySpec{Family::subsets, params.n, {}});
        }
        case Family::monomials: {
            if (!params.n) throw ArgumentError("monomials requires parameter n");
            if (*params.n < 1 || *params.n > 4) throw ArgumentError("monomials: n must be in 1..4");
            auto chain = make_generator(Family::symmetric_chain, {}, force);
            RankedStructure base = build_truncation(*chain, max_level);
            RankedStructure power = product_power(base, *params.n);
            return retag_family(power, FamilySpec{Family::monomials, params.n, {}});
        }
        default: {
            auto gen = make_generator(family, params, force);
            return build_truncation(*gen, max_level);
        }
    }
}

}  // namespace updown
