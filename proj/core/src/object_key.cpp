#include "updown/object_key.hpp"

#include <array>
#include <utility>

namespace updown {

namespace {
constexpr std::array<std::pair<Family, const char*>, 12> kNames{{
    {Family::two_chain, "two_chain"},
    {Family::subsets, "subsets"},
    {Family::symmetric_chain, "symmetric_chain"},
    {Family::monomials, "monomials"},
    {Family::necklaces, "necklaces"},
    {Family::young, "young"},
    {Family::kingman, "kingman"},
    {Family::compositions, "compositions"},
    {Family::planar_trees, "planar_trees"},
    {Family::rooted_trees, "rooted_trees"},
    {Family::product, "product"},
    {Family::cover, "cover"},
}};
}  // namespace

const char* family_name(Family f) {
    for (const auto& [fam, name] : kNames)
        if (fam == f) return name;
    return "?";
}

Family family_from_name(const std::string& name) {
    for (const auto& [fam, nm] : kNames)
        if (name == nm) return fam;
    throw ArgumentError("unknown family: " + name);
}

std::string to_display(const ObjectKey& p) {
    if (p.encoding.empty()) return "0^";  // the unique rank-0 object
    return p.encoding;
}

}  // namespace updown
