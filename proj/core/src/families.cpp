#include "updown/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "updown/compositions.hpp"
#include "updown/dyck.hpp"
#include "updown/necklaces.hpp"
#include "updown/partitions.hpp"
#include "updown/rooted_trees.hpp"

namespace updown {

BigInt ExampleGenerator::hom_count(const ObjectKey&, const ObjectKey&) const {
    throw ArgumentError("no hom oracle for family " + spec().label());
}

void ExampleGenerator::check_owned(const ObjectKey& p) const {
    if (p.family != spec().family || !is_canonical(p))
        throw ArgumentError("object does not belong to family " + spec().label() + ": " +
                            to_display(p));
}

namespace {

/// Backtracking count of injective f: [m] -> [n] with compatible(i, f(i)).
BigInt count_injections(int m, int n, const std::function<bool(int, int)>& compatible) {
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    BigInt total = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            ++total;
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            if (!compatible(i, j)) continue;
            used[static_cast<std::size_t>(j)] = true;
            self(self, i + 1);
            used[static_cast<std::size_t>(j)] = false;
        }
    };
    rec(rec, 0);
    return total;
}

void check_cap(int n, int cap, bool force, const char* name) {
    if (n < 0) throw ArgumentError("negative level");
    if (!force && n > cap)
        throw ResourceError(std::string("level cap for ") + name + " is " + std::to_string(cap) +
                            " (requested " + std::to_string(n) + "); use force to exceed it");
}

// ---------------------------------------------------------------------------
// Example 1: the two-object chain.
// ---------------------------------------------------------------------------

class TwoChainGenerator final : public ExampleGenerator {
public:
    explicit TwoChainGenerator(bool force) : force_(force) {}

    FamilySpec spec() const override { return {Family::two_chain, {}, {}}; }
    int level_cap() const override { return 8; }

    std::vector<ObjectKey> enumerate_level(int n) const override {
        check_cap(n, level_cap(), force_, "two_chain");
        if (n == 0) return {ObjectKey{Family::two_chain, 0, "0"}};
        if (n == 1) return {ObjectKey{Family::two_chain, 1, "1"}};
        return {};
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        return 1;
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        if (p.level == 0)
            return {{ObjectKey{Family::two_chain, 1, "1"}, CoveringRecord{1, 1, BigInt(1)}}};
        return {};
    }

    bool has_hom_oracle() const override { return true; }

    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        return 1;
    }

    bool is_canonical(const ObjectKey& p) const override {
        return (p.level == 0 && p.encoding == "0") || (p.level == 1 && p.encoding == "1");
    }

private:
    bool force_;
};

// ---------------------------------------------------------------------------
// Example 3: one object [n] per level, morphisms = injections [m] -> [n].
// ---------------------------------------------------------------------------

class SymmetricChainGenerator final : public ExampleGenerator {
public:
    explicit SymmetricChainGenerator(bool force) : force_(force) {}

    FamilySpec spec() const override { return {Family::symmetric_chain, {}, {}}; }
    int level_cap() const override { return 8; }

    std::vector<ObjectKey> enumerate_level(int n) const override {
        check_cap(n, level_cap(), force_, "symmetric_chain");
        return {ObjectKey{Family::symmetric_chain, n, std::to_string(n)}};
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        return factorial(static_cast<unsigned>(p.level));
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        const int n = p.level;
        CoveringRecord rec;
        rec.u = 1;
        rec.d = n + 1;
        rec.hom_count = factorial(static_cast<unsigned>(n + 1));
        return {{ObjectKey{Family::symmetric_chain, n + 1, std::to_string(n + 1)}, std::move(rec)}};
    }

    bool has_hom_oracle() const override { return true; }

    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        return count_injections(p.level, q.level, [](int, int) { return true; });
    }

    bool is_canonical(const ObjectKey& p) const override {
        return p.level >= 0 && p.encoding == std::to_string(p.level);
    }

private:
    bool force_;
};

// ---------------------------------------------------------------------------
// Example 5: necklaces over c colors; covers derived from hom counts.
// ---------------------------------------------------------------------------

class NecklacesGenerator final : public ExampleGenerator {
public:
    NecklacesGenerator(int c, bool force) : colors_(c), force_(force) {
        if (c < 1 || c > 6) throw ArgumentError("necklaces: c must be in 1..6");
    }

    FamilySpec spec() const override { return {Family::necklaces, {}, colors_}; }
    int level_cap() const override { return 7; }

    std::vector<ObjectKey> enumerate_level(int n) const override {
        check_cap(n, level_cap(), force_, "necklaces");
        std::vector<ObjectKey> out;
        for (auto& s : necklaces_of(n, colors_))
            out.push_back(ObjectKey{Family::necklaces, n, std::move(s)});
        return out;
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        return necklace_aut_order(p.encoding);
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        // Candidate covers: insert one bead of any color anywhere, then the
        // record follows from the hom count and the two automorphism orders.
        std::set<std::string> candidates;
        for (std::size_t pos = 0; pos <= p.encoding.size(); ++pos)
            for (int col = 0; col < colors_; ++col) {
                std::string s = p.encoding;
                s.insert(pos, 1, static_cast<char>('a' + col));
                candidates.insert(canonical_rotation(s));
            }
        std::vector<std::pair<ObjectKey, CoveringRecord>> out;
        const BigInt aut_p = necklace_aut_order(p.encoding);
        for (const auto& enc : candidates) {
            BigInt hom = necklace_hom_count_reps(p.encoding, enc);
            if (hom == 0) continue;
            const BigInt aut_q = necklace_aut_order(enc);
            if (hom % aut_q != 0 || hom % aut_p != 0)
                throw InvariantError("hom count not divisible by aut orders at necklace " + enc);
            CoveringRecord rec;
            rec.u = hom / aut_q;
            rec.d = hom / aut_p;
            rec.hom_count = hom;
            out.emplace_back(ObjectKey{Family::necklaces, p.level + 1, enc}, std::move(rec));
        }
        return out;
    }

    bool has_hom_oracle() const override { return true; }

    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        return necklace_hom_count_reps(p.encoding, q.encoding);
    }

    bool is_canonical(const ObjectKey& p) const override {
        if (static_cast<int>(p.encoding.size()) != p.level) return false;
        for (char ch : p.encoding)
            if (ch < 'a' || ch >= 'a' + colors_) return false;
        return canonical_rotation(p.encoding) == p.encoding;
    }

private:
    int colors_;
    bool force_;
};

// ---------------------------------------------------------------------------
// Example 6: Young's lattice with unit weights.
// ---------------------------------------------------------------------------

class YoungGenerator final : public ExampleGenerator {
public:
    explicit YoungGenerator(bool force) : force_(force) {}

    FamilySpec spec() const override { return {Family::young, {}, {}}; }
    int level_cap() const override { return 8; }

    std::vector<ObjectKey> enumerate_level(int n) const override {
        check_cap(n, level_cap(), force_, "young");
        std::vector<ObjectKey> out;
        for (const auto& lam : partitions_of(n))
            out.push_back(ObjectKey{Family::young, n, encode_partition(lam)});
        return out;
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        return 1;
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        std::vector<std::pair<ObjectKey, CoveringRecord>> out;
        for (const auto& mu : partition_covers(parse_partition(p.encoding)))
            out.emplace_back(ObjectKey{Family::young, p.level + 1, encode_partition(mu)},
                             CoveringRecord{1, 1, BigInt(1)});
        return out;
    }

    bool has_hom_oracle() const override { return true; }

    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        return partition_contains(parse_partition(q.encoding), parse_partition(p.encoding)) ? 1 : 0;
    }

    bool is_canonical(const ObjectKey& p) const override {
        try {
            Partition lam = parse_partition(p.encoding);
            return partition_weight(lam) == p.level;
        } catch (const ArgumentError&) {
            return false;
        }
    }

private:
    bool force_;
};

// ---------------------------------------------------------------------------
// Example 7: same objects as Young, Kingman branching weights.
// ---------------------------------------------------------------------------

class KingmanGenerator final : public ExampleGenerator {
public:
    explicit KingmanGenerator(bool force) : force_(force) {}

    FamilySpec spec() const override { return {Family::kingman, {}, {}}; }
    int level_cap() const override { return 8; }

    std::vector<ObjectKey> enumerate_level(int n) const override {
        check_cap(n, level_cap(), force_, "kingman");
        std::vector<ObjectKey> out;
        for (const auto& lam : partitions_of(n))
            out.push_back(ObjectKey{Family::kingman, n, encode_partition(lam)});
        return out;
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        Partition lam = parse_partition(p.encoding);
        BigInt aut = 1;
        int run = 1;
        for (std::size_t i = 1; i <= lam.size(); ++i) {
            if (i < lam.size() && lam[i] == lam[i - 1]) {
                ++run;
            } else {
                aut *= factorial(static_cast<unsigned>(run));
                run = 1;
            }
        }
        return aut;
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        Partition lam = parse_partition(p.encoding);
        std::vector<std::pair<ObjectKey, CoveringRecord>> out;
        for (const auto& mu : partition_covers(lam)) {
            CoveringRecord rec;
            if (mu.size() == lam.size() + 1) {
                // New part of size 1.
                rec.u = 1;
                rec.d = multiplicity_of(mu, 1);
            } else {
                // A part of size k grew to k+1; locate k via the multiset change.
                int k = 0;
                for (std::size_t i = 0; i < mu.size(); ++i)
                    if (mu[i] != lam[i]) {
                        k = lam[i];
                        break;
                    }
                rec.u = multiplicity_of(lam, k);
                rec.d = multiplicity_of(mu, k + 1);
            }
            out.emplace_back(ObjectKey{Family::kingman, p.level + 1, encode_partition(mu)},
                             std::move(rec));
        }
        return out;
    }

    bool has_hom_oracle() const override { return true; }

    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        Partition lam = parse_partition(p.encoding);
        Partition mu = parse_partition(q.encoding);
        return count_injections(static_cast<int>(lam.size()), static_cast<int>(mu.size()),
                                [&](int i, int j) {
                                    return lam[static_cast<std::size_t>(i)] <=
                                           mu[static_cast<std::size_t>(j)];
                                });
    }

    bool is_canonical(const ObjectKey& p) const override {
        try {
            Partition lam = parse_partition(p.encoding);
            return partition_weight(lam) == p.level;
        } catch (const ArgumentError&) {
            return false;
        }
    }

private:
    bool force_;
};

// ---------------------------------------------------------------------------
// Example 8: integer compositions, order-preserving injections.
// ---------------------------------------------------------------------------

class CompositionsGenerator final : public ExampleGenerator {
public:
    explicit CompositionsGenerator(bool force) : force_(force) {}

    FamilySpec spec() const override { return {Family::compositions, {}, {}}; }
    int level_cap() const override { return 8; }

    std::vector<ObjectKey> enumerate_level(int n) const override {
        check_cap(n, level_cap(), force_, "compositions");
        std::vector<ObjectKey> out;
        for (const auto& comp : compositions_of(n))
            out.push_back(ObjectKey{Family::compositions, n, encode_composition(comp)});
        return out;
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        return 1;
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        Composition I = parse_composition(p.encoding);
        std::map<std::string, BigInt> weight;
        for (std::size_t t = 0; t < I.size(); ++t) {
            Composition J = I;
            J[t] += 1;  // the only morphism here is the identity injection
            weight[encode_composition(J)] += 1;
        }
        std::set<std::string> inserted;
        for (std::size_t t = 0; t <= I.size(); ++t) {
            Composition J = I;
            J.insert(J.begin() + static_cast<std::ptrdiff_t>(t), 1);
            inserted.insert(encode_composition(J));
        }
        for (const auto& enc : inserted) {
            Composition J = parse_composition(enc);
            weight[enc] = BigInt(composition_insert_positions(I, J).size());
        }
        std::vector<std::pair<ObjectKey, CoveringRecord>> out;
        for (const auto& [enc, u] : weight)
            out.emplace_back(ObjectKey{Family::compositions, p.level + 1, enc},
                             CoveringRecord{u, u, u});
        return out;
    }

    bool has_hom_oracle() const override { return true; }

    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        Composition I = parse_composition(p.encoding);
        Composition J = parse_composition(q.encoding);
        // Order-preserving injections [p] -> [q] are index subsets.
        const int pl = static_cast<int>(I.size()), ql = static_cast<int>(J.size());
        BigInt count = 0;
        std::vector<int> chosen;
        auto rec = [&](auto&& self, int next, int need) -> void {
            if (need == 0) {
                ++count;
                return;
            }
            for (int j = next; j <= ql - need; ++j) {
                if (I[chosen.size()] > J[static_cast<std::size_t>(j)]) continue;
                chosen.push_back(j);
                self(self, j + 1, need - 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0, pl);
        return count;
    }

    bool is_canonical(const ObjectKey& p) const override {
        try {
            Composition I = parse_composition(p.encoding);
            int w = 0;
            for (int x : I) w += x;
            return w == p.level;
        } catch (const ArgumentError&) {
            return false;
        }
    }

private:
    bool force_;
};

// ---------------------------------------------------------------------------
// Example 9: planar rooted trees as Dyck words.
// ---------------------------------------------------------------------------

class PlanarTreesGenerator final : public ExampleGenerator {
public:
    explicit PlanarTreesGenerator(bool force) : force_(force) {}

    FamilySpec spec() const override { return {Family::planar_trees, {}, {}}; }
    int level_cap() const override { return 7; }

    std::vector<ObjectKey> enumerate_level(int n) const override {
        check_cap(n, level_cap(), force_, "planar_trees");
        std::vector<ObjectKey> out;
        for (auto& w : dyck_words_of(n))
            out.push_back(ObjectKey{Family::planar_trees, n, std::move(w)});
        return out;
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        return 1;
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        std::map<std::string, BigInt> weight;  // attach a leaf at each of 2n+1 positions
        for (int pos = 0; pos <= static_cast<int>(p.encoding.size()); ++pos)
            weight[dyck_insert_pair(p.encoding, pos)] += 1;
        std::vector<std::pair<ObjectKey, CoveringRecord>> out;
        for (const auto& [enc, u] : weight)
            out.emplace_back(ObjectKey{Family::planar_trees, p.level + 1, enc},
                             CoveringRecord{u, u, u});
        return out;
    }

    bool has_hom_oracle() const override { return true; }

    /// Morphisms f -> g are order-preserving injections missing two
    /// consecutive values that spell the attached "UD" pair in g.
    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        const std::string& f = p.encoding;
        const std::string& g = q.encoding;
        BigInt count = 0;
        for (std::size_t miss = 0; miss + 1 < g.size(); ++miss) {
            if (g[miss] != 'U' || g[miss + 1] != 'D') continue;
            bool ok = true;
            for (std::size_t i = 0; i < f.size() && ok; ++i) {
                std::size_t hi = i < miss ? i : i + 2;
                if (f[i] != g[hi]) ok = false;
            }
            if (ok) ++count;
        }
        return count;
    }

    bool is_canonical(const ObjectKey& p) const override {
        return static_cast<int>(p.encoding.size()) == 2 * p.level && is_dyck_word(p.encoding);
    }

private:
    bool force_;
};

// ---------------------------------------------------------------------------
// Example 10: rooted trees up to isomorphism.
// ---------------------------------------------------------------------------

class RootedTreesGenerator final : public ExampleGenerator {
public:
    explicit RootedTreesGenerator(bool force) : force_(force) {}

    FamilySpec spec() const override { return {Family::rooted_trees, {}, {}}; }
    int level_cap() const override { return 7; }

    std::vector<ObjectKey> enumerate_level(int n) const override {
        check_cap(n, level_cap(), force_, "rooted_trees");
        std::set<std::string> encs{"()"};
        for (int l = 0; l < n; ++l) {
            std::set<std::string> next;
            for (const auto& enc : encs)
                for (auto& grown : attach_leaf_everywhere(parse_rooted_tree(enc)))
                    next.insert(std::move(grown));
            encs = std::move(next);
        }
        std::vector<ObjectKey> out;
        for (const auto& enc : encs) out.push_back(ObjectKey{Family::rooted_trees, n, enc});
        return out;
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        return rooted_tree_aut_order(parse_rooted_tree(p.encoding));
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        RootedTree t = parse_rooted_tree(p.encoding);
        std::map<std::string, BigInt> ups;  // distinct vertices growing each cover
        for (auto& enc : attach_leaf_everywhere(t)) ups[enc] += 1;
        std::vector<std::pair<ObjectKey, CoveringRecord>> out;
        for (const auto& [enc, u] : ups) {
            RootedTree q = parse_rooted_tree(enc);
            BigInt d = 0;  // distinct terminal edges of q falling back to t
            for (auto& back : delete_each_leaf(q))
                if (back == p.encoding) d += 1;
            CoveringRecord rec;
            rec.u = u;
            rec.d = d;
            out.emplace_back(ObjectKey{Family::rooted_trees, p.level + 1, enc}, std::move(rec));
        }
        return out;
    }

    bool has_hom_oracle() const override { return true; }

    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        return rooted_tree_hom_count(parse_rooted_tree(p.encoding), parse_rooted_tree(q.encoding));
    }

    bool is_canonical(const ObjectKey& p) const override {
        try {
            RootedTree t = parse_rooted_tree(p.encoding);
            return rooted_tree_size(t) == p.level &&
                   encode_rooted_tree(canonicalize_rooted_tree(t)) == p.encoding;
        } catch (const ArgumentError&) {
            return false;
        }
    }

private:
    bool force_;
};

// ---------------------------------------------------------------------------
// Direct generators for the two product families (cross-check oracles; the
// production structures are built as product powers).
// ---------------------------------------------------------------------------

std::vector<std::string> split_commas(const std::string& enc) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = enc.find(',', pos);
        parts.push_back(enc.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

class SubsetsGenerator final : public ExampleGenerator {
public:
    SubsetsGenerator(int n, bool force) : n_(n), force_(force) {
        if (n < 1 || n > 8) throw ArgumentError("subsets: n must be in 1..8");
    }

    FamilySpec spec() const override { return {Family::subsets, n_, {}}; }
    int level_cap() const override { return 8; }

    std::vector<ObjectKey> enumerate_level(int lvl) const override {
        check_cap(lvl, level_cap(), force_, "subsets");
        std::vector<ObjectKey> out;
        if (lvl > n_) return out;
        std::vector<int> bits(static_cast<std::size_t>(n_), 0);
        auto rec = [&](auto&& self, int i, int ones) -> void {
            if (i == n_) {
                if (ones == lvl) out.push_back(key(bits));
                return;
            }
            bits[static_cast<std::size_t>(i)] = 0;
            self(self, i + 1, ones);
            bits[static_cast<std::size_t>(i)] = 1;
            self(self, i + 1, ones + 1);
            bits[static_cast<std::size_t>(i)] = 0;
        };
        rec(rec, 0, 0);
        std::sort(out.begin(), out.end());
        return out;
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        return 1;
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        auto bits = parse_bits(p.encoding);
        std::vector<std::pair<ObjectKey, CoveringRecord>> out;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == 1) continue;
            bits[i] = 1;
            out.emplace_back(key(bits), CoveringRecord{1, 1, BigInt(1)});
            bits[i] = 0;
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    bool has_hom_oracle() const override { return true; }

    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        auto a = parse_bits(p.encoding), b = parse_bits(q.encoding);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return 0;
        return 1;
    }

    bool is_canonical(const ObjectKey& p) const override {
        auto parts = split_commas(p.encoding);
        if (static_cast<int>(parts.size()) != n_) return false;
        int ones = 0;
        for (const auto& s : parts) {
            if (s != "0" && s != "1") return false;
            ones += (s == "1");
        }
        return ones == p.level;
    }

private:
    ObjectKey key(const std::vector<int>& bits) const {
        std::string enc;
        int ones = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (i) enc += ',';
            enc += static_cast<char>('0' + bits[i]);
            ones += bits[i];
        }
        return ObjectKey{Family::subsets, ones, enc};
    }

    std::vector<int> parse_bits(const std::string& enc) const {
        std::vector<int> bits;
        for (const auto& s : split_commas(enc)) bits.push_back(s == "1" ? 1 : 0);
        return bits;
    }

    int n_;
    bool force_;
};

class MonomialsGenerator final : public ExampleGenerator {
public:
    MonomialsGenerator(int n, bool force) : n_(n), force_(force) {
        if (n < 1 || n > 4) throw ArgumentError("monomials: n must be in 1..4");
    }

    FamilySpec spec() const override { return {Family::monomials, n_, {}}; }
    int level_cap() const override { return 8; }

    std::vector<ObjectKey> enumerate_level(int lvl) const override {
        check_cap(lvl, level_cap(), force_, "monomials");
        std::vector<ObjectKey> out;
        std::vector<int> exp(static_cast<std::size_t>(n_), 0);
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == n_ - 1) {
                exp[static_cast<std::size_t>(i)] = left;
                out.push_back(key(exp));
                return;
            }
            for (int e = 0; e <= left; ++e) {
                exp[static_cast<std::size_t>(i)] = e;
                self(self, i + 1, left - e);
            }
        };
        rec(rec, 0, lvl);
        std::sort(out.begin(), out.end());
        return out;
    }

    BigInt aut_order(const ObjectKey& p) const override {
        check_owned(p);
        BigInt aut = 1;
        for (int e : parse_exponents(p.encoding)) aut *= factorial(static_cast<unsigned>(e));
        return aut;
    }

    std::vector<std::pair<ObjectKey, CoveringRecord>> coverings(const ObjectKey& p) const override {
        check_owned(p);
        auto exp = parse_exponents(p.encoding);
        std::vector<std::pair<ObjectKey, CoveringRecord>> out;
        for (std::size_t j = 0; j < exp.size(); ++j) {
            exp[j] += 1;
            CoveringRecord rec;
            rec.u = 1;
            rec.d = exp[j];
            rec.hom_count = hom_for_step(exp, j);
            out.emplace_back(key(exp), std::move(rec));
            exp[j] -= 1;
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    bool has_hom_oracle() const override { return true; }

    BigInt hom_count(const ObjectKey& p, const ObjectKey& q) const override {
        check_owned(p);
        check_owned(q);
        if (q.level != p.level + 1) throw ArgumentError("hom_count needs adjacent levels");
        auto a = parse_exponents(p.encoding), b = parse_exponents(q.encoding);
        BigInt hom = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] > b[i]) return 0;
            hom *= count_injections(a[i], b[i], [](int, int) { return true; });
        }
        return hom;
    }

    bool is_canonical(const ObjectKey& p) const override {
        auto parts = split_commas(p.encoding);
        if (static_cast<int>(parts.size()) != n_) return false;
        int total = 0;
        for (const auto& s : parts) {
            if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
            for (char ch : s)
                if (ch < '0' || ch > '9') return false;
            total += std::stoi(s);
        }
        return total == p.level;
    }

private:
    ObjectKey key(const std::vector<int>& exp) const {
        std::string enc;
        int total = 0;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (i) enc += ',';
            enc += std::to_string(exp[i]);
            total += exp[i];
        }
        return ObjectKey{Family::monomials, total, enc};
    }

    std::vector<int> parse_exponents(const std::string& enc) const {
        std::vector<int> exp;
        for (const auto& s : split_commas(enc)) exp.push_back(std::stoi(s));
        return exp;
    }

    BigInt hom_for_step(const std::vector<int>& grown, std::size_t j) const {
        BigInt hom = 1;
        for (std::size_t i = 0; i < grown.size(); ++i) {
            int e = grown[i] - (i == j ? 1 : 0);
            hom *= i == j ? factorial(static_cast<unsigned>(e + 1))
                          : factorial(static_cast<unsigned>(e));
        }
        return hom;
    }

    int n_;
    bool force_;
};

}  // namespace

std::unique_ptr<ExampleGenerator> make_generator(Family family, const FamilyParams& params,
                                                 bool force) {
    auto need_n = [&](const char* name) {
        if (!params.n) throw ArgumentError(std::string(name) + " requires parameter n");
        return *params.n;
    };
    switch (family) {
        case Family::two_chain:
            return std::make_unique<TwoChainGenerator>(force);
        case Family::symmetric_chain:
            return std::make_unique<SymmetricChainGenerator>(force);
        case Family::necklaces:
            if (!params.c) throw ArgumentError("necklaces requires parameter c");
            return std::make_unique<NecklacesGenerator>(*params.c, force);
        case Family::young:
            return std::make_unique<YoungGenerator>(force);
        case Family::kingman:
            return std::make_unique<KingmanGenerator>(force);
        case Family::compositions:
            return std::make_unique<CompositionsGenerator>(force);
        case Family::planar_trees:
            return std::make_unique<PlanarTreesGenerator>(force);
        case Family::rooted_trees:
            return std::make_unique<RootedTreesGenerator>(force);
        case Family::subsets:
            return std::make_unique<SubsetsGenerator>(need_n("subsets"), force);
        case Family::monomials:
            return std::make_unique<MonomialsGenerator>(need_n("monomials"), force);
        default:
            throw ArgumentError("no generator for synthetic family tag");
    }
}

int default_level_cap(Family family) {
    switch (family) {
        case Family::planar_trees:
        case Family::rooted_trees:
        case Family::necklaces:
            return 7;
        default:
            return 8;
    }
}

}  // namespace updown
