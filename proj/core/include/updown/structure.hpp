#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "updown/object_key.hpp"
#include "updown/types.hpp"

namespace updown {

/// Multiplicities of one covering pair p -> q with |q| = |p| + 1.
/// Invariant: u * |Aut(q)| == d * |Aut(p)|, and when a hom count is
/// recorded, u == hom/|Aut(q)| and d == hom/|Aut(p)| exactly.
struct CoveringRecord {
    BigInt u = 0;
    BigInt d = 0;
    std::optional<BigInt> hom_count;
};

/// All objects of one rank, sorted lexicographically by encoding,
/// with their automorphism orders.
struct LevelData {
    std::vector<ObjectKey> objects;
    std::vector<BigInt> aut_orders;  // parallel to objects

    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& encoding) const;
    [[nodiscard]] std::size_t size() const { return objects.size(); }
};

/// A covering edge between adjacent levels, by index into the level arrays.
struct UpEdge {
    std::size_t src = 0;  // index into levels[n]
    std::size_t dst = 0;  // index into levels[n+1]
    CoveringRecord rec;
};

struct FamilySpec {
    Family family = Family::product;
    std::optional<int> n;  // subsets/monomials arity
    std::optional<int> c;  // necklace colors

    [[nodiscard]] std::string label() const;
};

/// A truncation of an updown category: levels 0..max_level with all
/// covering records between adjacent levels. Immutable after build; all
/// operations on it are pure.
class RankedStructure {
public:
    [[nodiscard]] int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    [[nodiscard]] const LevelData& level(int n) const;
    [[nodiscard]] bool unilateral() const { return unilateral_; }
    [[nodiscard]] const FamilySpec& spec() const { return spec_; }

    [[nodiscard]] bool contains(const ObjectKey& p) const;
    /// Index of p within its level; ArgumentError if p is not realized.
    [[nodiscard]] std::size_t index_of(const ObjectKey& p) const;
    [[nodiscard]] const BigInt& aut_order(const ObjectKey& p) const;
    [[nodiscard]] const ObjectKey& zero_hat() const;

    /// Covering edges out of level n (sorted by src, then dst).
    [[nodiscard]] std::span<const UpEdge> up_edges(int n) const;
    /// Edge indices into up_edges(n) leaving object i of level n.
    [[nodiscard]] std::span<const std::size_t> edges_from(int n, std::size_t i) const;
    /// Edge indices into up_edges(n-1) arriving at object i of level n.
    [[nodiscard]] std::span<const std::size_t> edges_into(int n, std::size_t i) const;

    [[nodiscard]] const CoveringRecord* record(const ObjectKey& p, const ObjectKey& q) const;

    [[nodiscard]] std::size_t total_objects() const;

private:
    friend class StructureBuilder;
    std::vector<LevelData> levels_;
    std::vector<std::vector<UpEdge>> up_edges_;           // [n]: level n -> n+1
    std::vector<std::vector<std::vector<std::size_t>>> out_index_;  // [n][src] -> edge ids
    std::vector<std::vector<std::vector<std::size_t>>> in_index_;   // [n][dst] -> edge ids in up_edges_[n-1]
    bool unilateral_ = true;
    FamilySpec spec_;
};

/// Assembles a RankedStructure level by level, then validates the
/// structural laws that can be checked locally: adjacent-level edges
/// only, a single rank-0 object, reachability of every higher object,
/// u,d >= 1, and u|Aut(q)| == d|Aut(p)| on every record.
class StructureBuilder {
public:
    explicit StructureBuilder(FamilySpec spec) : spec_(spec) {}

    void add_level(std::vector<ObjectKey> objects, std::vector<BigInt> aut_orders);
    void add_covering(const ObjectKey& p, const ObjectKey& q, CoveringRecord rec);

    /// Validates and freezes. Throws InvariantError on violations.
    /// `validate = false` skips the record and reachability checks so tests
    /// can build deliberately faulty structures for the verifiers.
    [[nodiscard]] RankedStructure finish(bool validate = true);

private:
    FamilySpec spec_;
    std::vector<LevelData> levels_;
    std::vector<std::map<std::pair<std::size_t, std::size_t>, CoveringRecord>> edges_;
};

/// Copy of S restricted to levels 0..max_level.
[[nodiscard]] RankedStructure truncate_structure(const RankedStructure& S, int max_level);

}  // namespace updown
