#include "updown/compositions.hpp"

#include <algorithm>

namespace updown {

std::string encode_composition(const Composition& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(parts[i]);
    }
    return out;
}

Composition parse_composition(const std::string& enc) {
    Composition parts;
    if (enc.empty()) return parts;
    std::size_t pos = 0;
    while (pos <= enc.size()) {
        std::size_t next = enc.find('|', pos);
        std::string tok = enc.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw ArgumentError("bad composition encoding: " + enc);
        int v = std::stoi(tok);
        if (v < 1) throw ArgumentError("composition parts must be positive: " + enc);
        parts.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

namespace {
void gen_compositions(int remaining, Composition& cur, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        cur.push_back(p);
        gen_compositions(remaining - p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    Composition cur;
    gen_compositions(n, cur, out);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        return encode_composition(a) < encode_composition(b);
    });
    return out;
}

std::vector<int> composition_insert_positions(const Composition& I, const Composition& J) {
    std::vector<int> positions;
    if (J.size() != I.size() + 1) return positions;
    for (std::size_t q = 0; q < J.size(); ++q) {
        if (J[q] != 1) continue;
        Composition del;
        del.reserve(I.size());
        for (std::size_t t = 0; t < J.size(); ++t)
            if (t != q) del.push_back(J[t]);
        if (del == I) positions.push_back(static_cast<int>(q) + 1);
    }
    return positions;
}

}  // namespace updown
