#include "updown/structure.hpp"

#include <algorithm>
#include <cstdlib>

namespace updown {

std::optional<std::size_t> LevelData::index_of(const std::string& encoding) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), encoding,
                               [](const ObjectKey& k, const std::string& e) { return k.encoding < e; });
    if (it == objects.end() || it->encoding != encoding) return std::nullopt;
    return static_cast<std::size_t>(it - objects.begin());
}

std::string FamilySpec::label() const {
    std::string s = family_name(family);
    if (n) s += "(n=" + std::to_string(*n) + ")";
    if (c) s += "(c=" + std::to_string(*c) + ")";
    return s;
}

const LevelData& RankedStructure::level(int n) const {
    if (n < 0 || n > max_level())
        throw ArgumentError("level " + std::to_string(n) + " outside truncation 0.." +
                            std::to_string(max_level()));
    return levels_[static_cast<std::size_t>(n)];
}

bool RankedStructure::contains(const ObjectKey& p) const {
    if (p.level < 0 || p.level > max_level()) return false;
    auto idx = levels_[static_cast<std::size_t>(p.level)].index_of(p.encoding);
    return idx.has_value();
}

std::size_t RankedStructure::index_of(const ObjectKey& p) const {
    if (p.level < 0 || p.level > max_level())
        throw ArgumentError("object level outside truncation: " + to_display(p));
    auto idx = levels_[static_cast<std::size_t>(p.level)].index_of(p.encoding);
    if (!idx) throw ArgumentError("object not realized in structure: " + to_display(p));
    return *idx;
}

const BigInt& RankedStructure::aut_order(const ObjectKey& p) const {
    return levels_[static_cast<std::size_t>(p.level)].aut_orders[index_of(p)];
}

const ObjectKey& RankedStructure::zero_hat() const {
    return levels_[0].objects[0];
}

std::span<const UpEdge> RankedStructure::up_edges(int n) const {
    if (n < 0 || n >= max_level()) return {};
    return up_edges_[static_cast<std::size_t>(n)];
}

std::span<const std::size_t> RankedStructure::edges_from(int n, std::size_t i) const {
    if (n < 0 || n >= max_level()) return {};
    return out_index_[static_cast<std::size_t>(n)][i];
}

std::span<const std::size_t> RankedStructure::edges_into(int n, std::size_t i) const {
    if (n <= 0 || n > max_level()) return {};
    return in_index_[static_cast<std::size_t>(n)][i];
}

const CoveringRecord* RankedStructure::record(const ObjectKey& p, const ObjectKey& q) const {
    if (q.level != p.level + 1) return nullptr;
    if (!contains(p) || !contains(q)) return nullptr;
    std::size_t si = index_of(p), di = index_of(q);
    for (std::size_t e : edges_from(p.level, si)) {
        const UpEdge& edge = up_edges_[static_cast<std::size_t>(p.level)][e];
        if (edge.dst == di) return &edge.rec;
    }
    return nullptr;
}

std::size_t RankedStructure::total_objects() const {
    std::size_t n = 0;
    for (const auto& l : levels_) n += l.objects.size();
    return n;
}

namespace {

std::size_t max_cells_guard() {
    static const std::size_t cap = [] {
        const char* env = std::getenv("UPDOWN_MAX_CELLS");
        if (!env) return static_cast<std::size_t>(0);
        return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    }();
    return cap;
}

}  // namespace

void StructureBuilder::add_level(std::vector<ObjectKey> objects, std::vector<BigInt> aut_orders) {
    if (objects.size() != aut_orders.size())
        throw InvariantError("add_level: objects/aut_orders size mismatch");
    const int n = static_cast<int>(levels_.size());
    if (n == 0 && objects.size() != 1)
        throw InvariantError("level 0 must contain exactly the single object 0^");
    std::size_t total = objects.size();
    for (const auto& l : levels_) total += l.objects.size();
    if (std::size_t cap = max_cells_guard(); cap > 0 && total > cap)
        throw ResourceError("UPDOWN_MAX_CELLS=" + std::to_string(cap) +
                            " exceeded while adding level " + std::to_string(n));
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (objects[i].level != n)
            throw InvariantError("object level does not match its rank: " + to_display(objects[i]));
        if (i > 0 && !(objects[i - 1].encoding < objects[i].encoding))
            throw InvariantError("level objects not strictly sorted at level " + std::to_string(n));
        if (aut_orders[i] < 1)
            throw InvariantError("aut order must be a positive integer: " + to_display(objects[i]));
    }
    levels_.push_back(LevelData{std::move(objects), std::move(aut_orders)});
    edges_.emplace_back();
}

void StructureBuilder::add_covering(const ObjectKey& p, const ObjectKey& q, CoveringRecord rec) {
    if (q.level != p.level + 1)
        throw InvariantError("covering must connect adjacent levels: " + to_display(p) + " -> " +
                             to_display(q));
    if (p.level < 0 || static_cast<std::size_t>(q.level) >= levels_.size())
        throw InvariantError("covering endpoints outside realized levels");
    auto si = levels_[static_cast<std::size_t>(p.level)].index_of(p.encoding);
    auto di = levels_[static_cast<std::size_t>(q.level)].index_of(q.encoding);
    if (!si || !di)
        throw InvariantError("covering endpoint not realized: " + to_display(p) + " -> " +
                             to_display(q));
    if (rec.u < 1 || rec.d < 1)
        throw InvariantError("covering record requires u >= 1 and d >= 1");
    auto [it, inserted] =
        edges_[static_cast<std::size_t>(p.level)].emplace(std::make_pair(*si, *di), std::move(rec));
    if (!inserted) throw InvariantError("duplicate covering record: " + to_display(p) + " -> " +
                                        to_display(q));
}

RankedStructure StructureBuilder::finish(bool validate) {
    if (levels_.empty()) throw InvariantError("structure needs at least level 0");
    RankedStructure S;
    S.spec_ = spec_;
    S.levels_ = std::move(levels_);
    const std::size_t L = S.levels_.size();
    S.up_edges_.assign(L > 0 ? L - 1 : 0, {});
    S.out_index_.assign(L > 0 ? L - 1 : 0, {});
    S.in_index_.assign(L, {});

    S.unilateral_ = true;
    for (const auto& lvl : S.levels_)
        for (const auto& a : lvl.aut_orders)
            if (a != 1) S.unilateral_ = false;

    for (std::size_t n = 0; n + 1 < L; ++n) {
        auto& out = S.out_index_[n];
        auto& in = S.in_index_[n + 1];
        out.assign(S.levels_[n].size(), {});
        in.assign(S.levels_[n + 1].size(), {});
        auto& vec = S.up_edges_[n];
        vec.reserve(edges_[n].size());
        for (auto& [key, rec] : edges_[n]) {
            const auto [si, di] = key;
            // u |Aut(q)| = d |Aut(p)| must hold record by record.
            if (validate &&
                rec.u * S.levels_[n + 1].aut_orders[di] != rec.d * S.levels_[n].aut_orders[si])
                throw InvariantError("u|Aut(q)| != d|Aut(p)| at " +
                                     to_display(S.levels_[n].objects[si]) + " -> " +
                                     to_display(S.levels_[n + 1].objects[di]));
            if (validate && rec.hom_count) {
                if (*rec.hom_count != rec.u * S.levels_[n + 1].aut_orders[di])
                    throw InvariantError("hom count inconsistent with u at " +
                                         to_display(S.levels_[n].objects[si]));
            }
            std::size_t id = vec.size();
            vec.push_back(UpEdge{si, di, std::move(rec)});
            out[si].push_back(id);
            in[di].push_back(id);
        }
    }

    // Reachability: every object above level 0 has an incoming covering.
    if (validate)
        for (std::size_t n = 1; n < L; ++n)
            for (std::size_t i = 0; i < S.levels_[n].size(); ++i)
                if (S.in_index_[n][i].empty())
                    throw InvariantError("object has no incoming covering: " +
                                         to_display(S.levels_[n].objects[i]));

    edges_.clear();
    return S;
}

RankedStructure truncate_structure(const RankedStructure& S, int max_level) {
    if (max_level < 0 || max_level > S.max_level())
        throw ArgumentError("truncate_structure: bad max_level");
    StructureBuilder b(S.spec());
    for (int n = 0; n <= max_level; ++n) {
        const auto& lvl = S.level(n);
        b.add_level(lvl.objects, lvl.aut_orders);
    }
    for (int n = 0; n < max_level; ++n)
        for (const UpEdge& e : S.up_edges(n))
            b.add_covering(S.level(n).objects[e.src], S.level(n + 1).objects[e.dst], e.rec);
    return b.finish();
}

}  // namespace updown
