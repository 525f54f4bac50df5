#include "updown/decode.hpp"

#include <algorithm>

#include "updown/compositions.hpp"
#include "updown/dyck.hpp"
#include "updown/partitions.hpp"

namespace updown {

DecodeFamily decode_family_from_name(const std::string& name) {
    if (name == "young") return DecodeFamily::young;
    if (name == "kingman_up") return DecodeFamily::kingman_up;
    if (name == "kingman_down") return DecodeFamily::kingman_down;
    if (name == "compositions") return DecodeFamily::compositions;
    if (name == "planar_trees") return DecodeFamily::planar_trees;
    if (name == "rooted_trees_down" || name == "rooted_trees")
        throw UnsupportedError(
            "no simple description of the rooted-tree down-cover objects is known; "
            "the raw chains are still available without --decode");
    throw ArgumentError(
        "no decoder for '" + name +
        "'; supported: young, kingman_up, kingman_down, compositions, planar_trees");
}

const char* decode_family_name(DecodeFamily f) {
    switch (f) {
        case DecodeFamily::young: return "young";
        case DecodeFamily::kingman_up: return "kingman_up";
        case DecodeFamily::kingman_down: return "kingman_down";
        case DecodeFamily::compositions: return "compositions";
        case DecodeFamily::planar_trees: return "planar_trees";
    }
    return "?";
}

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

void expect_family(const ChainObject& chain, Family fam, const char* name) {
    for (const auto& st : chain.steps)
        if (st.target.family != fam)
            throw ArgumentError(std::string("chain does not run over the ") + name + " structure");
}

std::string decode_young(const ChainObject& chain) {
    expect_family(chain, Family::young, "young");
    std::vector<std::vector<int>> rows;
    Partition prev;
    for (std::size_t stepno = 0; stepno < chain.steps.size(); ++stepno) {
        const auto& st = chain.steps[stepno];
        if (st.arrow_index != 0) throw ArgumentError("young chains have unit multiplicities");
        Partition mu = parse_partition(st.target.encoding);
        std::size_t row = prev.size();  // appended part unless an existing one grew
        for (std::size_t i = 0; i < prev.size(); ++i)
            if (mu[i] != prev[i]) {
                row = i;
                break;
            }
        if (row >= rows.size()) rows.emplace_back();
        rows[row].push_back(static_cast<int>(stepno) + 1);
        prev = std::move(mu);
    }
    std::string out = "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out += ',';
        out += join_ints(rows[r]);
    }
    return out + "]";
}

/// Ordered set partitions: block sizes weakly decreasing, equal sizes
/// ordered by increasing maximum. Arrow index i picks the i-th part of the
/// grown size class, counted from the head of its run.
std::string decode_kingman_up(const ChainObject& chain) {
    expect_family(chain, Family::kingman, "kingman up-quotient");
    std::vector<std::vector<int>> blocks;
    Partition prev;
    for (std::size_t stepno = 0; stepno < chain.steps.size(); ++stepno) {
        const int n = static_cast<int>(stepno) + 1;
        const auto& st = chain.steps[stepno];
        Partition mu = parse_partition(st.target.encoding);
        if (mu.size() == prev.size() + 1) {
            if (st.arrow_index != 0)
                throw ArgumentError("adding a new part admits a single arrow");
            blocks.push_back({n});
        } else {
            int k0 = 0;
            for (std::size_t i = 0; i < mu.size(); ++i)
                if (mu[i] != prev[i]) {
                    k0 = prev[i];
                    break;
                }
            std::size_t first = 0;
            while (first < prev.size() && prev[first] != k0) ++first;
            std::size_t pos = first + static_cast<std::size_t>(st.arrow_index);
            if (pos >= prev.size() || prev[pos] != k0)
                throw ArgumentError("arrow index outside the grown size class");
            auto grown = blocks[pos];
            grown.push_back(n);
            blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(pos));
            // Reinsert right after the last earlier block of size >= |grown|.
            std::size_t insert_at = 0;
            for (std::size_t j = 0; j < pos; ++j)
                if (blocks[j].size() >= grown.size()) insert_at = j + 1;
            blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(insert_at), grown);
        }
        prev = std::move(mu);
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (blocks[j].size() != static_cast<std::size_t>(prev[j]))
                throw InvariantError("ordered set partition does not project to the endpoint");
    }
    std::string out = "[";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out += ',';
        out += '{';
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(blocks[b][i]);
        }
        out += '}';
    }
    return out + "]";
}

/// Sequences with weakly decreasing value multiplicities. Arrow index picks
/// the target position i among the parts of the grown size; the shift
/// permutation re-labels earlier entries.
std::string decode_kingman_down(const ChainObject& chain) {
    expect_family(chain, Family::kingman, "kingman down-quotient");
    std::vector<int> seq;
    Partition prev;
    for (std::size_t stepno = 0; stepno < chain.steps.size(); ++stepno) {
        const auto& st = chain.steps[stepno];
        Partition mu = parse_partition(st.target.encoding);
        int size_grown = 1;
        if (mu.size() == prev.size()) {
            for (std::size_t t = 0; t < mu.size(); ++t)
                if (mu[t] != prev[t]) {
                    size_grown = mu[t];
                    break;
                }
        }
        // 1-based target position among parts of mu of size size_grown.
        int first = -1;
        for (std::size_t t = 0; t < mu.size(); ++t)
            if (mu[t] == size_grown) {
                first = static_cast<int>(t) + 1;
                break;
            }
        if (first < 0) throw ArgumentError("endpoint does not contain the grown part");
        int i = first + st.arrow_index;
        if (i > static_cast<int>(mu.size()) || mu[static_cast<std::size_t>(i) - 1] != size_grown)
            throw ArgumentError("arrow index outside the grown size class");
        // S = { j > i : mu_j = mu_i } must be the contiguous block {i+1..l}.
        int l = i;
        for (int j = i + 1; j <= static_cast<int>(mu.size()); ++j)
            if (mu[static_cast<std::size_t>(j) - 1] == size_grown)
                l = j;
            else
                break;
        for (int j = l + 1; j <= static_cast<int>(mu.size()); ++j)
            if (mu[static_cast<std::size_t>(j) - 1] == size_grown)
                throw InvariantError("shift block is not contiguous; cannot decode this chain");
        auto sigma = [&](int a) {
            if (a < i || a > l) return a;
            if (a == l) return i;
            return a + 1;
        };
        for (int& a : seq) a = sigma(a);
        seq.push_back(i);
        prev = std::move(mu);
        for (std::size_t t = 0; t < prev.size(); ++t) {
            int count = static_cast<int>(std::count(seq.begin(), seq.end(),
                                                    static_cast<int>(t) + 1));
            if (count != prev[t])
                throw InvariantError("decoded sequence does not project to the endpoint");
        }
    }
    return join_ints(seq);
}

/// Cayley permutations. The arrow enumerates either the unique identity
/// morphism (a part grew) or the skip positions ascending (a 1 was
/// inserted).
std::string decode_compositions(const ChainObject& chain) {
    expect_family(chain, Family::compositions, "compositions");
    std::vector<int> seq;
    Composition prev;
    for (std::size_t stepno = 0; stepno < chain.steps.size(); ++stepno) {
        const auto& st = chain.steps[stepno];
        Composition J = parse_composition(st.target.encoding);
        if (J.size() == prev.size()) {
            if (st.arrow_index != 0)
                throw ArgumentError("growing a part admits a single arrow");
            int q = 0;
            for (std::size_t t = 0; t < J.size(); ++t)
                if (J[t] != prev[t]) {
                    q = static_cast<int>(t) + 1;
                    break;
                }
            seq.push_back(q);
        } else {
            auto positions = composition_insert_positions(prev, J);
            if (st.arrow_index < 0 || static_cast<std::size_t>(st.arrow_index) >= positions.size())
                throw ArgumentError("arrow index outside the morphism enumeration");
            int q = positions[static_cast<std::size_t>(st.arrow_index)];
            for (int& a : seq)
                if (a >= q) ++a;
            seq.push_back(q);
        }
        prev = std::move(J);
        for (std::size_t t = 0; t < prev.size(); ++t)
            if (static_cast<int>(std::count(seq.begin(), seq.end(), static_cast<int>(t) + 1)) !=
                prev[t])
                throw InvariantError("Cayley permutation does not project to the endpoint");
    }
    return join_ints(seq);
}

/// Multiset permutations of {1,1,...,n,n}: step k writes the pair (k,k)
/// into the slot where the corresponding up-down pair was attached.
std::string decode_planar_trees(const ChainObject& chain) {
    expect_family(chain, Family::planar_trees, "planar_trees");
    std::vector<int> seq;
    std::string prev;
    for (std::size_t stepno = 0; stepno < chain.steps.size(); ++stepno) {
        const int n = static_cast<int>(stepno) + 1;
        const auto& st = chain.steps[stepno];
        auto positions = dyck_insert_positions(prev, st.target.encoding);
        if (st.arrow_index < 0 || static_cast<std::size_t>(st.arrow_index) >= positions.size())
            throw ArgumentError("arrow index outside the morphism enumeration");
        int pos = positions[static_cast<std::size_t>(st.arrow_index)];
        seq.insert(seq.begin() + pos, {n, n});
        prev = st.target.encoding;
    }
    // The first occurrence of each value reads 'U', the second 'D'.
    std::string word;
    std::vector<bool> seen(seq.size() / 2 + 1, false);
    for (int v : seq) {
        word += seen[static_cast<std::size_t>(v)] ? 'D' : 'U';
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (word != prev) throw InvariantError("multiset permutation does not project to the endpoint");
    return join_ints(seq);
}

}  // namespace

std::string decode_cover(DecodeFamily family, const ChainObject& chain) {
    switch (family) {
        case DecodeFamily::young: return decode_young(chain);
        case DecodeFamily::kingman_up: return decode_kingman_up(chain);
        case DecodeFamily::kingman_down: return decode_kingman_down(chain);
        case DecodeFamily::compositions: return decode_compositions(chain);
        case DecodeFamily::planar_trees: return decode_planar_trees(chain);
    }
    throw ArgumentError("unknown decode family");
}

}  // namespace updown
