#include "updown/dot_export.hpp"

#include <array>
#include <map>

namespace updown {

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string node_id(int level, std::size_t idx) {
    return "L" + std::to_string(level) + "_" + std::to_string(idx);
}

constexpr std::array<const char*, 8> kPalette{
    "lightblue", "lightsalmon", "palegreen", "khaki",
    "plum",      "lightgrey",   "orange",    "aquamarine",
};

void emit_levels(std::string& out, const RankedStructure& S,
                 const std::map<ObjectKey, std::string>* fills) {
    for (int n = 0; n <= S.max_level(); ++n) {
        const auto& lvl = S.level(n);
        out += "  { rank = same;";
        for (std::size_t i = 0; i < lvl.size(); ++i) out += " " + node_id(n, i) + ";";
        out += " }\n";
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            const ObjectKey& p = lvl.objects[i];
            std::string label = to_display(p);
            if (lvl.aut_orders[i] != 1) label += " |Aut|=" + lvl.aut_orders[i].str();
            out += "  " + node_id(n, i) + " [label = " + dot_quote(label);
            if (fills) {
                auto it = fills->find(p);
                if (it != fills->end())
                    out += ", style = filled, fillcolor = " + dot_quote(it->second);
            }
            out += "];\n";
        }
    }
    for (int n = 0; n < S.max_level(); ++n)
        for (const UpEdge& e : S.up_edges(n))
            out += "  " + node_id(n, e.src) + " -> " + node_id(n + 1, e.dst) + " [label = " +
                   dot_quote("u=" + e.rec.u.str() + ",d=" + e.rec.d.str()) + "];\n";
}

}  // namespace

std::string structure_to_dot(const RankedStructure& S, const std::string& name) {
    std::string out = "digraph " + dot_quote(name) + " {\n  rankdir = BT;\n";
    emit_levels(out, S, nullptr);
    out += "}\n";
    return out;
}

std::string cover_to_dot(const CoveringMapData& map, const std::string& name) {
    // Assign one color per base object, cycling a small palette.
    std::map<ObjectKey, std::string> base_color;
    std::size_t next = 0;
    for (int n = 0; n <= map.base.max_level(); ++n)
        for (const auto& p : map.base.level(n).objects) {
            base_color[p] = kPalette[next % kPalette.size()];
            ++next;
        }
    std::map<ObjectKey, std::string> fills;
    for (const auto& [ck, bk] : map.projection) fills[ck] = base_color[bk];

    std::string out = "digraph " + dot_quote(name) + " {\n  rankdir = BT;\n";
    emit_levels(out, map.total, &fills);
    out += "}\n";
    return out;
}

}  // namespace updown
