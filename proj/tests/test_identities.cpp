#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "updown/build.hpp"
#include "updown/identities.hpp"
#include "updown/operators.hpp"
#include "updown/product.hpp"

using namespace updown;

namespace {

FamilyParams with_n(int n) {
    FamilyParams p;
    p.n = n;
    return p;
}

FamilyParams with_c(int c) {
    FamilyParams p;
    p.c = c;
    return p;
}

}  // namespace

TEST_CASE("classification: young and symmetric chain are ACC r=1") {
    for (Family f : {Family::young, Family::symmetric_chain}) {
        auto S = make_structure(f, {}, 7);
        auto rep = commutator_classify(S);
        CHECK(rep.kind == CommutationKind::ACC);
        CHECK(rep.acc_r == Rational(1));
        CHECK(rep.verified_through_level == 6);
    }
}

TEST_CASE("classification: rooted trees are LCC with eps = level + 1") {
    auto S = make_structure(Family::rooted_trees, {}, 6);
    auto rep = commutator_classify(S);
    CHECK(rep.kind == CommutationKind::LCC);
    CHECK(rep.lcc_a == Rational(1));
    CHECK(rep.lcc_b == Rational(1));
}

TEST_CASE("classification: two_chain and subsets are LCC with slope -2") {
    auto two = make_structure(Family::two_chain, {}, 5);
    auto rep = commutator_classify(two);
    CHECK(rep.kind == CommutationKind::LCC);
    CHECK(rep.lcc_a == Rational(-2));
    CHECK(rep.lcc_b == Rational(1));

    for (int n = 2; n <= 4; ++n) {
        auto S = make_structure(Family::subsets, with_n(n), 6);
        auto r = commutator_classify(S);
        CHECK(r.kind == CommutationKind::LCC);
        CHECK(r.lcc_a == Rational(-2));
        CHECK(r.lcc_b == Rational(n));
    }
}

TEST_CASE("classification: monomials(n) are ACC r=n") {
    for (int n = 2; n <= 3; ++n) {
        auto S = make_structure(Family::monomials, with_n(n), 6);
        auto rep = commutator_classify(S);
        CHECK(rep.kind == CommutationKind::ACC);
        CHECK(rep.acc_r == Rational(n));
    }
}

TEST_CASE("classification: kingman, compositions, planar trees are WCC only") {
    for (Family f : {Family::kingman, Family::compositions, Family::planar_trees}) {
        auto S = make_structure(f, {}, 6);
        auto rep = commutator_classify(S);
        CHECK(rep.kind == CommutationKind::WCC);
        for (const auto& [p, eps] : rep.epsilon) REQUIRE(eps.has_value());
    }
}

TEST_CASE("classification: necklaces c=1 measure SCC with r = 1,1,4,6,8,...") {
    // Each level is a singleton, so the sequential condition holds by
    // construction; the eigenvalues are not affine in the level.
    auto S = make_structure(Family::necklaces, with_c(1), 7);
    auto rep = commutator_classify(S);
    CHECK(rep.kind == CommutationKind::SCC);
    std::vector<Rational> expected{1, 1, 4, 6, 8, 10, 12};
    REQUIRE(rep.level_r.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        REQUIRE(rep.level_r[i].has_value());
        CHECK(*rep.level_r[i] == expected[i]);
    }
    // The documented eigenvalue form (eps = level) does not match the
    // measured values; the formula check reports the first mismatch at 0^.
    auto formula = epsilon_formula_check(S, rep);
    CHECK(!formula.all_pass);
    REQUIRE(formula.first_mismatch.has_value());
    CHECK(formula.first_mismatch->level == 0);
    CHECK(formula.measured == Rational(1));
    CHECK(formula.predicted == Rational(0));
}

TEST_CASE("classification: necklaces c=2 are NONE with the 6,2 counterexample") {
    auto S = make_structure(Family::necklaces, with_c(2), 5);
    auto rep = commutator_classify(S);
    CHECK(rep.kind == CommutationKind::NONE);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->encoding == "aa");
    CHECK(rep.counterexample->level == 2);
    CHECK(rep.counterexample_image.coeff(ObjectKey{Family::necklaces, 2, "aa"}) == Rational(6));
    CHECK(rep.counterexample_image.coeff(ObjectKey{Family::necklaces, 2, "ab"}) == Rational(2));
}

TEST_CASE("epsilon closed forms match measurements") {
    struct Case {
        Family family;
        FamilyParams params;
        int level;
    };
    for (const auto& c : {Case{Family::young, {}, 7}, Case{Family::kingman, {}, 7},
                          Case{Family::compositions, {}, 7}, Case{Family::planar_trees, {}, 6},
                          Case{Family::rooted_trees, {}, 6}, Case{Family::subsets, with_n(4), 6},
                          Case{Family::monomials, with_n(2), 6}}) {
        auto S = make_structure(c.family, c.params, c.level);
        auto rep = commutator_classify(S);
        auto formula = epsilon_formula_check(S, rep);
        CHECK(formula.all_pass);
    }
    auto neck = make_structure(Family::necklaces, with_c(2), 4);
    CHECK_THROWS_AS((void)epsilon_closed_form(neck.spec(), neck.zero_hat()), ArgumentError);
}

TEST_CASE("esum values") {
    auto young = make_structure(Family::young, {}, 4);
    CHECK(esum_check(young, young.zero_hat()) == Rational(1));

    auto rooted = make_structure(Family::rooted_trees, {}, 4);
    CHECK(esum_check(rooted, ObjectKey{Family::rooted_trees, 1, "(())"}) == Rational(2));

    auto kingman = make_structure(Family::kingman, {}, 4);
    CHECK(esum_check(kingman, ObjectKey{Family::kingman, 2, "1+1"}) == Rational(3));

    CHECK_THROWS_AS((void)esum_check(young, ObjectKey{Family::young, 4, "4"}), ArgumentError);
}

TEST_CASE("esum equals the diagonal of the commutator everywhere") {
    for (Family f : {Family::young, Family::kingman, Family::rooted_trees}) {
        auto S = make_structure(f, {}, 5);
        for (int n = 0; n < 5; ++n)
            for (const auto& p : S.level(n).objects) {
                FormalVector basis = FormalVector::basis(p);
                FormalVector image =
                    down_apply(S, up_apply(S, basis)) - up_apply(S, down_apply(S, basis));
                CHECK(image.coeff(p) == esum_check(S, p));
            }
    }
    // Holds at non-eigenvectors too.
    auto neck = make_structure(Family::necklaces, with_c(2), 4);
    ObjectKey aa{Family::necklaces, 2, "aa"};
    FormalVector image = down_apply(neck, up_apply(neck, FormalVector::basis(aa))) -
                         up_apply(neck, down_apply(neck, FormalVector::basis(aa)));
    CHECK(image.coeff(aa) == esum_check(neck, aa));
    CHECK(image.coeff(aa) == Rational(6));
}

TEST_CASE("word evaluation") {
    auto young = make_structure(Family::young, {}, 6);
    auto rep = commutator_classify(young);

    auto du = valid_word_evaluate(young, "DU", young.zero_hat(), &rep);
    CHECK(du.value == Rational(1));
    REQUIRE(du.prediction.has_value());
    CHECK(*du.prediction == Rational(1));

    auto d2u2 = valid_word_evaluate(young, "DDUU", young.zero_hat(), &rep);
    CHECK(d2u2.value == Rational(2));
    CHECK(*d2u2.prediction == Rational(2));

    auto chain = make_structure(Family::symmetric_chain, {}, 6);
    auto crep = commutator_classify(chain);
    auto cdu = valid_word_evaluate(chain, "DU", chain.zero_hat(), &crep);
    CHECK(cdu.value == Rational(1));

    CHECK_THROWS_AS((void)valid_word_evaluate(young, "UD", young.zero_hat(), nullptr),
                    ArgumentError);  // suffix starts with D
    CHECK_THROWS_AS((void)valid_word_evaluate(young, "UU", young.zero_hat(), nullptr),
                    ArgumentError);  // balance mismatch
    std::string deep(7, 'U');
    std::string word = std::string(7, 'D') + deep;
    CHECK_THROWS_AS((void)valid_word_evaluate(young, word, young.zero_hat(), nullptr),
                    ResourceError);  // leaves the truncation
}

TEST_CASE("all valid p-words of length <= 6 match the product formula") {
    for (Family f : {Family::young, Family::symmetric_chain}) {
        auto S = make_structure(f, {}, 7);
        auto rep = commutator_classify(S);
        REQUIRE(rep.at_least(CommutationKind::SCC));
        for (int len = 1; len <= 6; ++len)
            for (unsigned mask = 0; mask < (1u << len); ++mask) {
                std::string word;
                int balance = 0;
                for (int i = 0; i < len; ++i) {
                    bool up = mask & (1u << i);
                    word += up ? 'U' : 'D';
                    balance += up ? 1 : -1;
                }
                if (balance < 0 || balance > S.max_level()) continue;
                int suffix = 0;
                bool valid = true;
                for (auto it = word.rbegin(); it != word.rend(); ++it) {
                    suffix += *it == 'U' ? 1 : -1;
                    if (suffix < 0) valid = false;
                }
                if (!valid) continue;
                for (const auto& p : S.level(balance).objects) {
                    auto ev = valid_word_evaluate(S, word, p, &rep);
                    REQUIRE(ev.prediction.has_value());
                    CHECK(ev.matches());
                }
            }
    }
}

TEST_CASE("weight-sum identity on young") {
    auto S = make_structure(Family::young, {}, 7);
    auto rep = commutator_classify(S);

    auto c = prop_weight_sum(S, rep, S.zero_hat(), 4);
    CHECK(c.holds);
    CHECK(c.lhs == Rational(24));

    auto c2 = prop_weight_sum(S, rep, ObjectKey{Family::young, 1, "1"}, 1);
    CHECK(c2.holds);
    CHECK(c2.lhs == Rational(2));

    auto c3 = prop_weight_sum(S, rep, ObjectKey{Family::young, 2, "2"}, 0);
    CHECK(c3.holds);
    CHECK(c3.lhs == Rational(1));  // u(0^;p), empty product

    auto wcc_only = commutator_classify(make_structure(Family::kingman, {}, 4));
    auto K = make_structure(Family::kingman, {}, 4);
    CHECK_THROWS_AS((void)prop_weight_sum(K, wcc_only, K.zero_hat(), 1), PreconditionError);
}

TEST_CASE("wcc level identities hold for the WCC families") {
    for (Family f : {Family::kingman, Family::compositions, Family::planar_trees, Family::young}) {
        auto S = make_structure(f, {}, 5);
        auto rep = commutator_classify(S);
        auto checks = wcc_level_identities(S, rep);
        REQUIRE(checks.size() == 3);
        for (const auto& c : checks) CHECK(c.holds);
    }
    // young's level-2 identity instantiates as 2 = 1 + 1.
    auto S = make_structure(Family::young, {}, 5);
    auto rep = commutator_classify(S);
    auto checks = wcc_level_identities(S, rep);
    CHECK(checks[1].lhs == Rational(2));
}

TEST_CASE("chain counts") {
    auto young = make_structure(Family::young, {}, 5);
    CHECK(chain_count(young, young.zero_hat(), ObjectKey{Family::young, 3, "2+1"}) == 2);
    ObjectKey one{Family::young, 1, "1"};
    ObjectKey two{Family::young, 2, "2"};
    CHECK(chain_count(young, one, two) == 1);
    CHECK_THROWS_AS((void)chain_count(young, one, one), ArgumentError);
    auto kingman = make_structure(Family::kingman, {}, 4);
    CHECK_THROWS_AS((void)chain_count(kingman, kingman.zero_hat(), one), PreconditionError);

    // Length-1 chains are the arrows themselves.
    auto comps = make_structure(Family::compositions, {}, 3);
    ObjectKey c1{Family::compositions, 1, "1"};
    ObjectKey c11{Family::compositions, 2, "1|1"};
    CHECK(chain_count(comps, c1, c11) == 2);
    CHECK(comps.record(c1, c11)->u == 2);
}

TEST_CASE("product eigenvalues add") {
    auto chain = make_structure(Family::symmetric_chain, {}, 5);
    auto young = make_structure(Family::young, {}, 5);
    auto prod = product_structure(chain, young);
    auto rep = commutator_classify(prod);
    CHECK(rep.kind == CommutationKind::ACC);
    CHECK(rep.acc_r == Rational(2));  // 1 + 1
}
