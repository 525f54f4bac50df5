#include "updown/necklaces.hpp"

#include <algorithm>
#include <set>

namespace updown {

std::string canonical_rotation(const std::string& beads) {
    if (beads.empty()) return beads;
    std::string best = beads;
    std::string cur = beads;
    for (std::size_t r = 1; r < beads.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

BigInt necklace_aut_order(const std::string& beads) {
    const std::size_t m = beads.size();
    if (m == 0) return 1;
    for (std::size_t p = 1; p <= m; ++p) {
        if (m % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + p < m && periodic; ++i)
            if (beads[i] != beads[i + p]) periodic = false;
        if (periodic) return BigInt(m / p);
    }
    return 1;
}

BigInt necklace_hom_count_reps(const std::string& f, const std::string& g) {
    const std::size_t m = f.size();
    if (g.size() != m + 1)
        throw ArgumentError("necklace hom counting needs adjacent levels");
    if (m == 0) return 1;  // the empty map into any single-bead class
    // A cyclic-order-preserving injection is determined by the missed target
    // position and by where bead 0 lands within the remaining cyclic sequence.
    BigInt count = 0;
    const std::size_t n = m + 1;
    for (std::size_t missed = 0; missed < n; ++missed) {
        std::vector<std::size_t> image;
        image.reserve(m);
        for (std::size_t j = 0; j < n; ++j)
            if (j != missed) image.push_back(j);
        for (std::size_t start = 0; start < m; ++start) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i)
                if (f[i] != g[image[(start + i) % m]]) ok = false;
            if (ok) ++count;
        }
    }
    return count;
}

std::vector<std::string> necklaces_of(int m, int c) {
    std::set<std::string> out;
    if (m == 0) {
        out.insert("");
    } else {
        std::string cur(static_cast<std::size_t>(m), 'a');
        while (true) {
            out.insert(canonical_rotation(cur));
            int i = m - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == 'a' + c - 1) {
                cur[static_cast<std::size_t>(i)] = 'a';
                --i;
            }
            if (i < 0) break;
            cur[static_cast<std::size_t>(i)] += 1;
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace updown
