#include "updown/identities.hpp"

#include <algorithm>

#include "updown/compositions.hpp"
#include "updown/dyck.hpp"
#include "updown/operators.hpp"
#include "updown/partitions.hpp"

namespace updown {

const char* commutation_kind_name(CommutationKind k) {
    switch (k) {
        case CommutationKind::ACC: return "ACC";
        case CommutationKind::LCC: return "LCC";
        case CommutationKind::SCC: return "SCC";
        case CommutationKind::WCC: return "WCC";
        case CommutationKind::NONE: return "NONE";
    }
    return "?";
}

std::string CommutatorReport::summary() const {
    std::string s = commutation_kind_name(kind);
    switch (kind) {
        case CommutationKind::ACC:
            s += " r=" + to_string(acc_r);
            break;
        case CommutationKind::LCC:
            s += " a=" + to_string(lcc_a) + " b=" + to_string(lcc_b);
            break;
        case CommutationKind::SCC: {
            s += " r=[";
            for (std::size_t i = 0; i < level_r.size(); ++i) {
                if (i) s += ',';
                s += level_r[i] ? to_string(*level_r[i]) : std::string("-");
            }
            s += "]";
            break;
        }
        case CommutationKind::WCC:
            break;
        case CommutationKind::NONE:
            if (counterexample)
                s += " first non-eigenvector " + to_display(*counterexample) + ": (DU-UD) = " +
                     counterexample_image.to_string();
            break;
    }
    s += " (consistent through level " + std::to_string(verified_through_level) + ")";
    return s;
}

CommutatorReport commutator_classify(const RankedStructure& S) {
    if (S.max_level() < 2)
        throw PreconditionError("commutator_classify needs max_level >= 2");
    CommutatorReport report;
    report.verified_through_level = S.max_level() - 1;

    bool all_eigen = true;
    for (int n = 0; n < S.max_level(); ++n) {
        for (const auto& p : S.level(n).objects) {
            FormalVector basis = FormalVector::basis(p);
            FormalVector image =
                down_apply(S, up_apply(S, basis)) - up_apply(S, down_apply(S, basis));
            std::optional<Rational> eps;
            if (image.empty())
                eps = Rational(0);
            else if (image.size() == 1 && image.terms().begin()->first == p)
                eps = image.terms().begin()->second;
            report.epsilon.emplace(p, eps);
            if (!eps && all_eigen) {
                all_eigen = false;
                report.counterexample = p;
                report.counterexample_image = image;
            }
        }
    }

    if (!all_eigen) {
        report.kind = CommutationKind::NONE;
        return report;
    }

    // Per-level eigenvalues where constant; empty levels carry no constraint.
    std::vector<std::optional<Rational>> level_r(static_cast<std::size_t>(S.max_level()));
    bool scc = true;
    for (int n = 0; n < S.max_level(); ++n) {
        std::optional<Rational> r;
        bool constant = true;
        for (const auto& p : S.level(n).objects) {
            const Rational& eps = *report.epsilon.at(ObjectKey{p.family, p.level, p.encoding});
            if (!r)
                r = eps;
            else if (*r != eps)
                constant = false;
        }
        if (!constant) {
            scc = false;
            break;
        }
        level_r[static_cast<std::size_t>(n)] = r;  // nullopt for empty levels
    }

    if (!scc) {
        report.kind = CommutationKind::WCC;
        return report;
    }
    report.level_r = level_r;

    // Constant fit.
    std::optional<Rational> common;
    bool acc = true;
    for (const auto& r : level_r) {
        if (!r) continue;
        if (!common)
            common = *r;
        else if (*common != *r)
            acc = false;
    }
    if (acc && common) {
        report.kind = CommutationKind::ACC;
        report.acc_r = *common;
        report.lcc_a = 0;
        report.lcc_b = *common;
        return report;
    }

    // Exact affine fit through the first two realized levels, checked on all.
    std::vector<std::pair<int, Rational>> points;
    for (std::size_t n = 0; n < level_r.size(); ++n)
        if (level_r[n]) points.emplace_back(static_cast<int>(n), *level_r[n]);
    if (points.size() >= 2) {
        Rational a = (points[1].second - points[0].second) /
                     Rational(points[1].first - points[0].first);
        Rational b = points[0].second - a * Rational(points[0].first);
        bool affine = true;
        for (const auto& [lvl, r] : points)
            if (r != a * Rational(lvl) + b) affine = false;
        if (affine) {
            report.kind = CommutationKind::LCC;
            report.lcc_a = a;
            report.lcc_b = b;
            return report;
        }
    }

    report.kind = CommutationKind::SCC;
    return report;
}

Rational epsilon_closed_form(const FamilySpec& spec, const ObjectKey& p) {
    switch (spec.family) {
        case Family::young:
        case Family::symmetric_chain:
            return 1;
        case Family::monomials:
            return Rational(spec.n.value());
        case Family::two_chain:
            return Rational(1 - 2 * p.level);
        case Family::subsets:
            return Rational(spec.n.value() - 2 * p.level);
        case Family::necklaces:
            if (spec.c.value() == 1) return Rational(p.level);
            throw ArgumentError("necklaces with c >= 2 have no documented eigenvalue form");
        case Family::kingman: {
            Partition lam = parse_partition(p.encoding);
            return Rational(1 + multiplicity_of(lam, 1));
        }
        case Family::compositions: {
            Composition I = parse_composition(p.encoding);
            int m1 = static_cast<int>(std::count(I.begin(), I.end(), 1));
            return Rational(static_cast<int>(I.size()) + 2 * m1 + 1);
        }
        case Family::planar_trees:
            return Rational(2 * p.level + dyck_leaf_count(p.encoding) + 1);
        case Family::rooted_trees:
            return Rational(p.level + 1);
        default:
            throw ArgumentError("no documented eigenvalue form for " +
                                std::string(family_name(spec.family)));
    }
}

FormulaCheckResult epsilon_formula_check(const RankedStructure& S,
                                         const CommutatorReport& report) {
    FormulaCheckResult res;
    for (int n = 0; n <= report.verified_through_level; ++n) {
        for (const auto& p : S.level(n).objects) {
            Rational predicted = epsilon_closed_form(S.spec(), p);
            const auto& eps = report.epsilon.at(p);
            if (!eps || *eps != predicted) {
                res.all_pass = false;
                res.first_mismatch = p;
                res.measured = eps ? *eps : Rational(0);
                res.predicted = predicted;
                return res;
            }
        }
    }
    return res;
}

Rational esum_check(const RankedStructure& S, const ObjectKey& c) {
    if (c.level >= S.max_level())
        throw ArgumentError("esum needs |c| < max_level (the covers of c must be realized)");
    std::size_t i = S.index_of(c);
    Rational acc = 0;
    for (std::size_t e : S.edges_from(c.level, i)) {
        const auto& rec = S.up_edges(c.level)[e].rec;
        acc += Rational(rec.u * rec.d);
    }
    for (std::size_t e : S.edges_into(c.level, i)) {
        const auto& rec = S.up_edges(c.level - 1)[e].rec;
        acc -= Rational(rec.u * rec.d);
    }
    return acc;
}

namespace {

void require_valid_word(const std::string& word, int target_level) {
    int balance = 0;
    for (char ch : word)
        if (ch != 'U' && ch != 'D') throw ArgumentError("word letters must be U or D");
    // Suffix condition: reading from the right, D's never outnumber U's.
    int suffix = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        suffix += (*it == 'U') ? 1 : -1;
        if (suffix < 0)
            throw ArgumentError("invalid word: a suffix has more D's than U's");
    }
    for (char ch : word) balance += (ch == 'U') ? 1 : -1;
    if (balance != target_level)
        throw ArgumentError("invalid p-word: letter balance " + std::to_string(balance) +
                            " does not match |p| = " + std::to_string(target_level));
}

}  // namespace

WordEvaluation valid_word_evaluate(const RankedStructure& S, const std::string& word,
                                   const ObjectKey& p, const CommutatorReport* scc) {
    if (!S.contains(p)) throw ArgumentError("word target not realized: " + to_display(p));
    require_valid_word(word, p.level);

    FormalVector v = FormalVector::basis(S.zero_hat());
    int height = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it == 'U') {
            ++height;
            if (height > S.max_level())
                throw ResourceError("word evaluation leaves the truncation at height " +
                                    std::to_string(height));
            v = up_apply(S, v);
        } else {
            --height;
            v = down_apply(S, v);
        }
    }
    WordEvaluation out;
    out.value = v.coeff(p) * Rational(S.aut_order(p));

    if (scc && scc->at_least(CommutationKind::SCC)) {
        // c_i = #{j > i : w_j = U} - #{j >= i : w_j = D}, for positions with w_i = D.
        const int s = static_cast<int>(word.size());
        Rational product = 1;
        bool have_all_r = true;
        for (int i = 0; i < s; ++i) {
            if (word[static_cast<std::size_t>(i)] != 'D') continue;
            int ups = 0, downs = 0;
            for (int j = i + 1; j < s; ++j)
                if (word[static_cast<std::size_t>(j)] == 'U') ++ups;
            for (int j = i; j < s; ++j)
                if (word[static_cast<std::size_t>(j)] == 'D') ++downs;
            int ci = ups - downs;
            Rational prefix = 0;
            for (int k = 0; k <= ci; ++k) {
                if (k >= static_cast<int>(scc->level_r.size()) ||
                    !scc->level_r[static_cast<std::size_t>(k)]) {
                    have_all_r = false;
                    break;
                }
                prefix += *scc->level_r[static_cast<std::size_t>(k)];
            }
            if (!have_all_r) break;
            product *= prefix;
        }
        if (have_all_r) {
            auto [u0, d0] = extended_multiplicity(S, S.zero_hat(), p);
            out.prediction = d0 * product;
        }
    }
    return out;
}

IdentityCheck prop_weight_sum(const RankedStructure& S, const CommutatorReport& report,
                              const ObjectKey& p, int a) {
    if (!report.at_least(CommutationKind::SCC))
        throw PreconditionError("prop_weight_sum needs an SCC certificate");
    if (a < 0 || p.level + a > S.max_level())
        throw ArgumentError("prop_weight_sum: |p| + a must stay within the truncation");

    const int k = p.level;
    IdentityCheck check;
    check.label = "weight_sum(" + to_display(p) + ", a=" + std::to_string(a) + ")";

    FormalVector va = FormalVector::basis(p);
    for (int i = 0; i < a; ++i) va = up_apply(S, va);
    auto powers_zero = up_powers_from_zero(S);
    const FormalVector& z = powers_zero[static_cast<std::size_t>(k + a)];
    Rational lhs = 0;
    const BigInt& aut_p = S.aut_order(p);
    for (const auto& [q, coeff] : va.terms()) {
        Rational d_pq = coeff * Rational(S.aut_order(q)) / Rational(aut_p);
        lhs += d_pq * z.coeff(q);
    }

    Rational u0p = powers_zero[static_cast<std::size_t>(k)].coeff(p);
    Rational rhs = u0p;
    for (int i = 0; i < a; ++i) {
        Rational prefix = 0;
        for (int j = 0; j <= k + i; ++j) {
            const auto& rj = report.level_r[static_cast<std::size_t>(j)];
            if (!rj)
                throw PreconditionError("no r_" + std::to_string(j) +
                                        " on an empty level; cannot form the product");
            prefix += *rj;
        }
        rhs *= prefix;
    }

    check.lhs = lhs;
    check.rhs = rhs;
    check.holds = lhs == rhs;
    return check;
}

std::vector<IdentityCheck> wcc_level_identities(const RankedStructure& S,
                                                const CommutatorReport& report) {
    if (!report.at_least(CommutationKind::WCC))
        throw PreconditionError("wcc_level_identities needs a WCC certificate");
    if (S.max_level() < 4 || report.verified_through_level < 3)
        throw PreconditionError("wcc_level_identities needs eigenvalues through level 3");

    auto powers = up_powers_from_zero(S);
    const Rational aut0(S.aut_order(S.zero_hat()));
    // u(0^;q) d(0^;q) = u(0^;q)^2 |Aut(q)| / |Aut(0^)|.
    auto ud = [&](const ObjectKey& q, const Rational& u0) {
        return u0 * u0 * Rational(S.aut_order(q)) / aut0;
    };
    auto ud_sum = [&](int lvl) {
        Rational acc = 0;
        for (const auto& [q, u0] : powers[static_cast<std::size_t>(lvl)].terms()) acc += ud(q, u0);
        return acc;
    };
    auto eps = [&](const ObjectKey& p) { return *report.epsilon.at(p); };

    std::vector<IdentityCheck> checks;
    {
        IdentityCheck c;
        c.label = "ezero (level 1)";
        c.lhs = ud_sum(1);
        c.rhs = eps(S.zero_hat());
        c.holds = c.lhs == c.rhs;
        checks.push_back(c);
    }
    {
        IdentityCheck c;
        c.label = "wcc level 2";
        c.lhs = ud_sum(2);
        Rational e0 = eps(S.zero_hat());
        c.rhs = e0 * e0;
        for (const auto& [p, u0] : powers[1].terms()) c.rhs += ud(p, u0) * eps(p);
        c.holds = c.lhs == c.rhs;
        checks.push_back(c);
    }
    {
        IdentityCheck c;
        c.label = "wcc level 3";
        c.lhs = ud_sum(3);
        Rational e0 = eps(S.zero_hat());
        c.rhs = 0;
        for (const auto& [p, u0] : powers[1].terms()) {
            Rational w = eps(p) + e0;
            c.rhs += ud(p, u0) * w * w;
        }
        for (const auto& [q, u0] : powers[2].terms()) c.rhs += ud(q, u0) * eps(q);
        c.holds = c.lhs == c.rhs;
        checks.push_back(c);
    }
    return checks;
}

namespace {

void count_chains(const RankedStructure& S, int level, std::size_t idx, int target_level,
                  std::size_t target_idx, BigInt& count) {
    if (level == target_level) {
        if (idx == target_idx) ++count;
        return;
    }
    for (std::size_t e : S.edges_from(level, idx)) {
        const UpEdge& edge = S.up_edges(level)[e];
        // Arrows are distinguishable: branch once per arrow index.
        for (BigInt k = 0; k < edge.rec.u; ++k)
            count_chains(S, level + 1, edge.dst, target_level, target_idx, count);
    }
}

}  // namespace

BigInt chain_count(const RankedStructure& S, const ObjectKey& p, const ObjectKey& q) {
    if (!S.unilateral())
        throw PreconditionError("chain_count requires a unilateral structure");
    if (q.level <= p.level) throw ArgumentError("chain_count needs |q| > |p|");
    BigInt count = 0;
    count_chains(S, p.level, S.index_of(p), q.level, S.index_of(q), count);
    return count;
}

}  // namespace updown
