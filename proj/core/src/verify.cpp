#include "updown/verify.hpp"

#include <map>

#include "updown/operators.hpp"

namespace updown {

namespace {

std::string pair_label(const RankedStructure& S, int n, std::size_t src, std::size_t dst) {
    return to_display(S.level(n).objects[src]) + " -> " + to_display(S.level(n + 1).objects[dst]);
}

CheckResult check_udaut(const RankedStructure& S) {
    for (int n = 0; n < S.max_level(); ++n)
        for (const UpEdge& e : S.up_edges(n)) {
            const BigInt& aut_p = S.level(n).aut_orders[e.src];
            const BigInt& aut_q = S.level(n + 1).aut_orders[e.dst];
            if (e.rec.u * aut_q != e.rec.d * aut_p)
                return {"udaut", false, false,
                        "u|Aut(q)| != d|Aut(p)| at " + pair_label(S, n, e.src, e.dst)};
        }
    return {"udaut", true, false, ""};
}

/// Composition through the intermediate level for every pair at rank gap 2,
/// compared against the extended (operator-power) multiplicities.
CheckResult check_composition(const RankedStructure& S) {
    for (int n = 0; n + 2 <= S.max_level(); ++n) {
        const auto& lvl = S.level(n);
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            // Sum u(p;p')u(p';q) and d(p;p')d(p';q) over the middle level.
            std::map<std::size_t, BigInt> u_sum, d_sum;
            for (std::size_t e1 : S.edges_from(n, i)) {
                const UpEdge& a = S.up_edges(n)[e1];
                for (std::size_t e2 : S.edges_from(n + 1, a.dst)) {
                    const UpEdge& b = S.up_edges(n + 1)[e2];
                    u_sum[b.dst] += a.rec.u * b.rec.u;
                    d_sum[b.dst] += a.rec.d * b.rec.d;
                }
            }
            const ObjectKey& p = lvl.objects[i];
            FormalVector two = up_apply(S, up_apply(S, FormalVector::basis(p)));
            const auto& top = S.level(n + 2);
            for (std::size_t qi = 0; qi < top.size(); ++qi) {
                const ObjectKey& q = top.objects[qi];
                Rational u_ext = two.coeff(q);
                Rational d_ext = u_ext * Rational(top.aut_orders[qi]) / Rational(lvl.aut_orders[i]);
                BigInt u_mid = u_sum.count(qi) ? u_sum[qi] : BigInt(0);
                BigInt d_mid = d_sum.count(qi) ? d_sum[qi] : BigInt(0);
                if (u_ext != Rational(u_mid))
                    return {"composition_u", false, false,
                            "u(p;q) != sum over middle level at " + to_display(p) + " -> " +
                                to_display(q)};
                if (d_ext != Rational(d_mid))
                    return {"composition_d", false, false,
                            "d(p;q) != sum over middle level at " + to_display(p) + " -> " +
                                to_display(q)};
            }
        }
    }
    return {"composition", true, false, ""};
}

CheckResult check_adjointness(const RankedStructure& S) {
    for (int n = 0; n < S.max_level(); ++n) {
        const auto& lvl = S.level(n);
        const auto& nxt = S.level(n + 1);
        std::vector<FormalVector> ups, downs;
        ups.reserve(lvl.size());
        downs.reserve(nxt.size());
        for (std::size_t i = 0; i < lvl.size(); ++i)
            ups.push_back(up_apply(S, FormalVector::basis(lvl.objects[i])));
        for (std::size_t j = 0; j < nxt.size(); ++j)
            downs.push_back(down_apply(S, FormalVector::basis(nxt.objects[j])));
        for (std::size_t i = 0; i < lvl.size(); ++i)
            for (std::size_t j = 0; j < nxt.size(); ++j) {
                Rational lhs = ups[i].coeff(nxt.objects[j]) * Rational(nxt.aut_orders[j]);
                Rational rhs = downs[j].coeff(lvl.objects[i]) * Rational(lvl.aut_orders[i]);
                if (lhs != rhs)
                    return {"adjointness", false, false,
                            "<Up,q> != <p,Dq> at " + pair_label(S, n, i, j)};
            }
    }
    return {"adjointness", true, false, ""};
}

CheckResult check_hom_oracle(const RankedStructure& S, const HomOracle& oracle) {
    for (int n = 0; n < S.max_level(); ++n)
        for (const UpEdge& e : S.up_edges(n)) {
            const ObjectKey& p = S.level(n).objects[e.src];
            const ObjectKey& q = S.level(n + 1).objects[e.dst];
            BigInt hom = oracle(p, q);
            const BigInt& aut_p = S.level(n).aut_orders[e.src];
            const BigInt& aut_q = S.level(n + 1).aut_orders[e.dst];
            if (hom % aut_q != 0 || hom % aut_p != 0)
                return {"hom_oracle", false, false,
                        "|Hom| not exactly divisible by aut orders at " +
                            pair_label(S, n, e.src, e.dst)};
            if (hom / aut_q != e.rec.u || hom / aut_p != e.rec.d)
                return {"hom_oracle", false, false,
                        "|Hom|/|Aut| disagrees with stored record at " +
                            pair_label(S, n, e.src, e.dst)};
            if (e.rec.hom_count && *e.rec.hom_count != hom)
                return {"hom_oracle", false, false,
                        "stored hom count disagrees with oracle at " +
                            pair_label(S, n, e.src, e.dst)};
        }
    return {"hom_oracle", true, false, ""};
}

}  // namespace

VerificationReport verify_structure(const RankedStructure& S, const HomOracle& oracle) {
    VerificationReport report;
    report.checks.push_back(check_udaut(S));
    report.checks.push_back(check_composition(S));
    report.checks.push_back(check_adjointness(S));
    if (oracle)
        report.checks.push_back(check_hom_oracle(S, oracle));
    else
        report.add_skipped("hom_oracle", "skipped: no hom oracle for this family");
    return report;
}

}  // namespace updown
