#include "updown/cover.hpp"

#include <algorithm>
#include <set>

#include "updown/operators.hpp"

namespace updown {

namespace {

RankedStructure quotient(const RankedStructure& S, bool use_u) {
    StructureBuilder builder(S.spec());
    for (int n = 0; n <= S.max_level(); ++n) {
        const auto& lvl = S.level(n);
        builder.add_level(lvl.objects, std::vector<BigInt>(lvl.size(), BigInt(1)));
    }
    for (int n = 0; n < S.max_level(); ++n)
        for (const UpEdge& e : S.up_edges(n)) {
            const BigInt& w = use_u ? e.rec.u : e.rec.d;
            builder.add_covering(S.level(n).objects[e.src], S.level(n + 1).objects[e.dst],
                                 CoveringRecord{w, w, w});
        }
    return builder.finish();
}

}  // namespace

RankedStructure up_quotient(const RankedStructure& S) { return quotient(S, true); }

RankedStructure down_quotient(const RankedStructure& S) { return quotient(S, false); }

std::string ChainObject::encode() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += '/';
        out += steps[i].target.encoding + "#" + std::to_string(steps[i].arrow_index);
    }
    return out;
}

CoveringMapData universal_cover(const RankedStructure& S, int max_level) {
    if (!S.unilateral())
        throw PreconditionError(
            "universal_cover requires a unilateral structure; apply up_quotient or "
            "down_quotient first");
    if (max_level < 0 || max_level > S.max_level())
        throw ArgumentError("universal_cover: max_level outside the realized truncation");

    CoveringMapData out;
    out.base = truncate_structure(S, max_level);

    FamilySpec cover_spec;
    cover_spec.family = Family::cover;
    StructureBuilder builder(cover_spec);

    std::vector<std::vector<ChainObject>> chains_by_level(static_cast<std::size_t>(max_level) + 1);
    chains_by_level[0].push_back(ChainObject{});

    auto cover_key = [](const ChainObject& ch) {
        return ObjectKey{Family::cover, ch.level(), ch.encode()};
    };

    for (int n = 0; n <= max_level; ++n) {
        auto& chains = chains_by_level[static_cast<std::size_t>(n)];
        std::sort(chains.begin(), chains.end(), [](const ChainObject& a, const ChainObject& b) {
            return a.encode() < b.encode();
        });
        std::vector<ObjectKey> objs;
        objs.reserve(chains.size());
        for (const auto& ch : chains) objs.push_back(cover_key(ch));
        builder.add_level(std::move(objs), std::vector<BigInt>(chains.size(), BigInt(1)));

        for (const auto& ch : chains) {
            ObjectKey endpoint = n == 0 ? S.zero_hat() : ch.steps.back().target;
            ObjectKey ck = cover_key(ch);
            out.projection.emplace(ck, endpoint);
            out.chains.emplace(ck, ch);
            if (n == max_level) continue;
            std::size_t ei = S.index_of(endpoint);
            for (std::size_t e : S.edges_from(n, ei)) {
                const UpEdge& edge = S.up_edges(n)[e];
                const ObjectKey& q = S.level(n + 1).objects[edge.dst];
                for (BigInt k = 0; k < edge.rec.u; ++k) {
                    ChainObject next = ch;
                    next.steps.push_back(ChainStep{q, static_cast<int>(k)});
                    chains_by_level[static_cast<std::size_t>(n) + 1].push_back(std::move(next));
                }
            }
        }
    }

    for (int n = 0; n < max_level; ++n)
        for (const auto& ch : chains_by_level[static_cast<std::size_t>(n) + 1]) {
            ChainObject prefix = ch;
            prefix.steps.pop_back();
            builder.add_covering(cover_key(prefix), cover_key(ch), CoveringRecord{1, 1, BigInt(1)});
        }

    out.total = builder.finish();
    return out;
}

VerificationReport verify_covering(const CoveringMapData& map) {
    VerificationReport report;
    const RankedStructure& T = map.total;
    const RankedStructure& B = map.base;

    // Projection: defined everywhere, level preserving, surjective per level.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= T.max_level() && ok; ++n)
            for (const auto& p : T.level(n).objects) {
                auto it = map.projection.find(p);
                if (it == map.projection.end()) {
                    ok = false;
                    detail = "no projection for " + to_display(p);
                    break;
                }
                if (it->second.level != p.level || !B.contains(it->second)) {
                    ok = false;
                    detail = "projection of " + to_display(p) + " is not a base object of level " +
                             std::to_string(p.level);
                    break;
                }
            }
        report.add("projection_levels", ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= std::min(T.max_level(), B.max_level()) && ok; ++n) {
            std::set<std::string> hit;
            for (const auto& p : T.level(n).objects) {
                auto it = map.projection.find(p);
                if (it != map.projection.end()) hit.insert(it->second.encoding);
            }
            if (hit.size() != B.level(n).size()) {
                ok = false;
                detail = "projection not surjective onto level " + std::to_string(n);
            }
        }
        report.add("projection_surjective", ok, detail);
    }

    // Bijection law on multiplicity data: for every cover object pt and
    // every base cover q of pi(pt), the fiber-summed u equals the base u.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n < T.max_level() && ok; ++n) {
            const auto& lvl = T.level(n);
            for (std::size_t i = 0; i < lvl.size() && ok; ++i) {
                const ObjectKey& pt = lvl.objects[i];
                const ObjectKey base_p = map.projection.at(pt);
                std::size_t bi = B.index_of(base_p);
                // Fiber sums keyed by base target.
                std::map<ObjectKey, BigInt> fiber_sum;
                for (std::size_t e : T.edges_from(n, i)) {
                    const UpEdge& edge = T.up_edges(n)[e];
                    const ObjectKey& qt = T.level(n + 1).objects[edge.dst];
                    fiber_sum[map.projection.at(qt)] += edge.rec.u;
                }
                std::map<ObjectKey, BigInt> base_u;
                for (std::size_t e : B.edges_from(n, bi)) {
                    const UpEdge& edge = B.up_edges(n)[e];
                    base_u[B.level(n + 1).objects[edge.dst]] = edge.rec.u;
                }
                if (fiber_sum != base_u) {
                    ok = false;
                    detail = "fiber-summed multiplicities over " + to_display(pt) +
                             " do not match the base covers of " + to_display(base_p);
                }
            }
        }
        report.add("fiber_bijection", ok, detail);
    }

    // Remark: |fiber over p| == u(0^;p).
    {
        bool ok = true;
        std::string detail;
        std::map<ObjectKey, BigInt> fiber_size;
        for (const auto& [ck, bk] : map.projection) fiber_size[bk] += 1;
        auto powers = up_powers_from_zero(B);
        for (int n = 0; n <= B.max_level() && ok; ++n)
            for (const auto& p : B.level(n).objects) {
                Rational u0 = powers[static_cast<std::size_t>(n)].coeff(p);
                BigInt fs = fiber_size.count(p) ? fiber_size[p] : BigInt(0);
                if (u0 != Rational(fs)) {
                    ok = false;
                    detail = "fiber size over " + to_display(p) + " is " + fs.str() +
                             ", expected u(0^;p) = " + to_string(u0);
                    break;
                }
            }
        report.add("fiber_size_law", ok, detail);
    }

    // Universal covers are simple: in-degree exactly 1 with u = d = 1.
    {
        bool ok = true;
        std::string detail;
        for (int n = 1; n <= T.max_level() && ok; ++n) {
            const auto& lvl = T.level(n);
            for (std::size_t i = 0; i < lvl.size(); ++i) {
                auto in = T.edges_into(n, i);
                if (in.size() != 1 || T.up_edges(n - 1)[in[0]].rec.u != 1 ||
                    T.up_edges(n - 1)[in[0]].rec.d != 1) {
                    ok = false;
                    detail = "cover object without unique unit incoming arrow: " +
                             to_display(lvl.objects[i]);
                    break;
                }
            }
        }
        report.add("cover_simple", ok, detail);
    }

    return report;
}

}  // namespace updown
