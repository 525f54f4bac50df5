#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "updown/build.hpp"
#include "updown/necklaces.hpp"
#include "updown/operators.hpp"
#include "updown/partitions.hpp"
#include "updown/rooted_trees.hpp"

using namespace updown;

TEST_CASE("level counts against independent counting oracles") {
    auto young = make_structure(Family::young, {}, 7);
    for (int n = 0; n <= 7; ++n)
        CHECK(BigInt(young.level(n).size()) == oracles::partition_count(n));

    auto comps = make_structure(Family::compositions, {}, 7);
    CHECK(comps.level(0).size() == 1);
    for (int n = 1; n <= 7; ++n)
        CHECK(comps.level(n).size() == (1u << (n - 1)));

    auto planar = make_structure(Family::planar_trees, {}, 6);
    for (int n = 0; n <= 6; ++n)
        CHECK(BigInt(planar.level(n).size()) == oracles::catalan(n));

    FamilyParams n5;
    n5.n = 5;
    auto subsets = make_structure(Family::subsets, n5, 5);
    for (int n = 0; n <= 5; ++n)
        CHECK(BigInt(subsets.level(n).size()) == oracles::binomial(5, n));

    for (int c = 1; c <= 3; ++c) {
        FamilyParams pc;
        pc.c = c;
        auto necklaces = make_structure(Family::necklaces, pc, 6);
        for (int n = 0; n <= 6; ++n)
            CHECK(BigInt(necklaces.level(n).size()) == oracles::necklace_count(n, c));
    }

    auto rooted = make_structure(Family::rooted_trees, {}, 6);
    for (int n = 0; n <= 6; ++n)
        CHECK(BigInt(rooted.level(n).size()) == oracles::rooted_tree_count(n));
}

TEST_CASE("specific level enumerations") {
    auto gen = make_generator(Family::young);
    auto level4 = gen->enumerate_level(4);
    std::vector<std::string> encs;
    for (const auto& p : level4) encs.push_back(p.encoding);
    CHECK(encs == std::vector<std::string>{"1+1+1+1", "2+1+1", "2+2", "3+1", "4"});

    FamilyParams c2;
    c2.c = 2;
    auto ngen = make_generator(Family::necklaces, c2);
    CHECK(ngen->enumerate_level(2).size() == 3);  // aa, ab, bb

    auto tgen = make_generator(Family::rooted_trees);
    CHECK(tgen->enumerate_level(3).size() == 4);
    CHECK_THROWS_AS((void)tgen->enumerate_level(20), ResourceError);
}

TEST_CASE("aut orders") {
    auto chain = make_generator(Family::symmetric_chain);
    CHECK(chain->aut_order(ObjectKey{Family::symmetric_chain, 4, "4"}) == 24);

    auto kingman = make_generator(Family::kingman);
    CHECK(kingman->aut_order(ObjectKey{Family::kingman, 5, "2+2+1"}) == 2);
    // Against brute force over part permutations.
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(kingman->aut_order(ObjectKey{Family::kingman, n, encode_partition(lam)}) ==
                  oracles::brute_force_partition_aut(lam));

    auto rooted = make_generator(Family::rooted_trees);
    CHECK(rooted->aut_order(ObjectKey{Family::rooted_trees, 2, "(()())"}) == 2);
    // Against brute force over root-preserving vertex permutations.
    for (int n = 0; n <= 4; ++n)
        for (const auto& p : rooted->enumerate_level(n))
            CHECK(rooted->aut_order(p) == oracles::brute_force_tree_aut(p.encoding));

    // Foreign objects are rejected.
    CHECK_THROWS_AS((void)kingman->aut_order(ObjectKey{Family::kingman, 2, "1+2"}), ArgumentError);
    CHECK_THROWS_AS((void)rooted->aut_order(ObjectKey{Family::young, 1, "1"}), ArgumentError);
}

TEST_CASE("kingman coverings from the branching tables") {
    auto gen = make_generator(Family::kingman);
    auto covers = gen->coverings(ObjectKey{Family::kingman, 2, "1+1"});
    REQUIRE(covers.size() == 2);
    std::map<std::string, std::pair<BigInt, BigInt>> got;
    for (const auto& [q, rec] : covers) got[q.encoding] = {rec.u, rec.d};
    CHECK(got["2+1"] == std::pair<BigInt, BigInt>{2, 1});
    CHECK(got["1+1+1"] == std::pair<BigInt, BigInt>{1, 3});
}

TEST_CASE("young coverings are the partition covers with unit weights") {
    auto gen = make_generator(Family::young);
    auto covers = gen->coverings(ObjectKey{Family::young, 3, "2+1"});
    std::set<std::string> targets;
    for (const auto& [q, rec] : covers) {
        targets.insert(q.encoding);
        CHECK(rec.u == 1);
        CHECK(rec.d == 1);
    }
    CHECK(targets == std::set<std::string>{"3+1", "2+2", "2+1+1"});
}

TEST_CASE("planar tree coverings: 2|t|+1 attachment positions") {
    auto gen = make_generator(Family::planar_trees);
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : gen->enumerate_level(n)) {
            BigInt total = 0;
            for (const auto& [q, rec] : gen->coverings(p)) total += rec.u;
            CHECK(total == 2 * n + 1);
        }
    auto covers = gen->coverings(ObjectKey{Family::planar_trees, 1, "UD"});
    std::map<std::string, BigInt> got;
    for (const auto& [q, rec] : covers) {
        got[q.encoding] = rec.u;
        CHECK(rec.u == rec.d);
    }
    CHECK(got["UUDD"] == 1);
    CHECK(got["UDUD"] == 2);
}

TEST_CASE("hom counts match records via Def 2.2 divisions") {
    // |Hom([n],[n+1])| = (n+1)!
    auto chain = make_generator(Family::symmetric_chain);
    CHECK(chain->hom_count(ObjectKey{Family::symmetric_chain, 2, "2"},
                           ObjectKey{Family::symmetric_chain, 3, "3"}) == 6);
    for (int n = 0; n <= 5; ++n)
        CHECK(chain->hom_count(ObjectKey{Family::symmetric_chain, n, std::to_string(n)},
                               ObjectKey{Family::symmetric_chain, n + 1, std::to_string(n + 1)}) ==
              factorial(static_cast<unsigned>(n + 1)));

    auto comps = make_generator(Family::compositions);
    CHECK(comps->hom_count(ObjectKey{Family::compositions, 1, "1"},
                           ObjectKey{Family::compositions, 2, "1|1"}) == 2);
    CHECK_THROWS_AS((void)comps->hom_count(ObjectKey{Family::compositions, 1, "1"},
                                           ObjectKey{Family::compositions, 3, "1|1|1"}),
                    ArgumentError);

    FamilyParams c2;
    c2.c = 2;
    auto neck = make_generator(Family::necklaces, c2);
    CHECK(neck->hom_count(ObjectKey{Family::necklaces, 0, ""},
                          ObjectKey{Family::necklaces, 1, "a"}) == 1);

    // Every stored record divides exactly.
    for (Family f : {Family::kingman, Family::compositions, Family::planar_trees}) {
        auto gen = make_generator(f, {});
        auto S = make_structure(f, {}, 5);
        for (int n = 0; n < 5; ++n)
            for (const UpEdge& e : S.up_edges(n)) {
                const ObjectKey& p = S.level(n).objects[e.src];
                const ObjectKey& q = S.level(n + 1).objects[e.dst];
                BigInt hom = gen->hom_count(p, q);
                CHECK(hom == e.rec.u * S.aut_order(q));
                CHECK(hom == e.rec.d * S.aut_order(p));
            }
    }
}

TEST_CASE("rooted tree hom counts against records at small sizes") {
    auto gen = make_generator(Family::rooted_trees);
    auto S = make_structure(Family::rooted_trees, {}, 4);
    for (int n = 0; n < 4; ++n)
        for (const UpEdge& e : S.up_edges(n)) {
            const ObjectKey& p = S.level(n).objects[e.src];
            const ObjectKey& q = S.level(n + 1).objects[e.dst];
            BigInt hom = gen->hom_count(p, q);
            CHECK(hom == e.rec.u * S.aut_order(q));
            CHECK(hom == e.rec.d * S.aut_order(p));
        }
}

TEST_CASE("canonicalize_rooted_tree") {
    // Child order never matters.
    RootedTree cherry_a, cherry_b;
    RootedTree path2 = parse_rooted_tree("((()))");
    RootedTree leaf = parse_rooted_tree("(())");
    cherry_a.children = {path2.children[0], leaf.children[0]};
    cherry_b.children = {leaf.children[0], path2.children[0]};
    CHECK(encode_rooted_tree(canonicalize_rooted_tree(cherry_a)) ==
          encode_rooted_tree(canonicalize_rooted_tree(cherry_b)));

    // Idempotent.
    auto canon = canonicalize_rooted_tree(cherry_a);
    CHECK(encode_rooted_tree(canonicalize_rooted_tree(canon)) == encode_rooted_tree(canon));

    // Non-isomorphic trees get distinct encodings.
    CHECK(encode_rooted_tree(canonicalize_rooted_tree(path2)) !=
          encode_rooted_tree(canonicalize_rooted_tree(parse_rooted_tree("(()())"))));

    // All level-3 trees pairwise distinct.
    auto gen = make_generator(Family::rooted_trees);
    auto lvl3 = gen->enumerate_level(3);
    std::set<std::string> encs;
    for (const auto& p : lvl3) encs.insert(p.encoding);
    CHECK(encs.size() == 4);
}

TEST_CASE("necklace representative independence of hom counts") {
    // Counting with non-canonical rotations of either side gives the same
    // totals as with the canonical representatives.
    for (int c = 2; c <= 3; ++c) {
        FamilyParams pc;
        pc.c = c;
        auto gen = make_generator(Family::necklaces, pc);
        for (int m = 1; m <= 4; ++m)
            for (const auto& p : gen->enumerate_level(m))
                for (const auto& [q, rec] : gen->coverings(p)) {
                    REQUIRE(rec.hom_count.has_value());
                    std::string pr = p.encoding, qr = q.encoding;
                    std::rotate(pr.begin(), pr.begin() + 1, pr.end());
                    std::rotate(qr.begin(), qr.begin() + (qr.size() > 1 ? 2 : 0), qr.end());
                    CHECK(necklace_hom_count_reps(pr, q.encoding) == *rec.hom_count);
                    CHECK(necklace_hom_count_reps(p.encoding, qr) == *rec.hom_count);
                    CHECK(necklace_hom_count_reps(pr, qr) == *rec.hom_count);
                }
    }
}

TEST_CASE("necklaces: u(0^;p) = m!/|Aut p| and d(0^;p) = m!") {
    for (int c = 1; c <= 3; ++c) {
        FamilyParams pc;
        pc.c = c;
        auto S = make_structure(Family::necklaces, pc, 5);
        for (int m = 0; m <= 5; ++m)
            for (const auto& p : S.level(m).objects) {
                auto [u, d] = extended_multiplicity(S, S.zero_hat(), p);
                CHECK(d == Rational(factorial(static_cast<unsigned>(m))));
                CHECK(u * Rational(S.aut_order(p)) ==
                      Rational(factorial(static_cast<unsigned>(m))));
            }
    }
}

TEST_CASE("necklaces c=1: single object per level with U(p_n) = n p_{n+1}") {
    FamilyParams pc;
    pc.c = 1;
    auto S = make_structure(Family::necklaces, pc, 6);
    for (int n = 0; n <= 6; ++n) REQUIRE(S.level(n).size() == 1);
    // U(p_0) = p_1 (reachability forces a unit arrow at the bottom).
    FormalVector u0 = up_apply(S, FormalVector::basis(S.level(0).objects[0]));
    CHECK(u0.coeff(S.level(1).objects[0]) == Rational(1));
    for (int n = 1; n < 6; ++n) {
        FormalVector up = up_apply(S, FormalVector::basis(S.level(n).objects[0]));
        CHECK(up.coeff(S.level(n + 1).objects[0]) == Rational(n));
        FormalVector down = down_apply(S, FormalVector::basis(S.level(n).objects[0]));
        CHECK(down.coeff(S.level(n - 1).objects[0]) == Rational(n));
    }
}

TEST_CASE("kingman and young induce the same partial order") {
    auto young = make_structure(Family::young, {}, 6);
    auto kingman = make_structure(Family::kingman, {}, 6);
    for (int n = 0; n < 6; ++n) {
        auto ye = young.up_edges(n);
        auto ke = kingman.up_edges(n);
        REQUIRE(ye.size() == ke.size());
        for (std::size_t i = 0; i < ye.size(); ++i) {
            CHECK(ye[i].src == ke[i].src);
            CHECK(ye[i].dst == ke[i].dst);
        }
    }
}

TEST_CASE("rooted trees: d(0^;t)/u(0^;t) = |Aut t|") {
    auto S = make_structure(Family::rooted_trees, {}, 6);
    for (int n = 0; n <= 6; ++n)
        for (const auto& t : S.level(n).objects) {
            auto [u, d] = extended_multiplicity(S, S.zero_hat(), t);
            REQUIRE(u != 0);
            CHECK(d / u == Rational(S.aut_order(t)));
        }
}
