#include "updown/rooted_trees.hpp"

#include <algorithm>
#include <map>

namespace updown {

std::string encode_rooted_tree(const RootedTree& t) {
    std::string out = "(";
    for (const auto& c : t.children) out += encode_rooted_tree(c);
    out += ")";
    return out;
}

RootedTree canonicalize_rooted_tree(const RootedTree& raw) {
    RootedTree t;
    t.children.reserve(raw.children.size());
    for (const auto& c : raw.children) t.children.push_back(canonicalize_rooted_tree(c));
    std::sort(t.children.begin(), t.children.end(), [](const RootedTree& a, const RootedTree& b) {
        return encode_rooted_tree(a) < encode_rooted_tree(b);
    });
    return t;
}

RootedTree parse_rooted_tree(const std::string& enc) {
    std::size_t pos = 0;
    // Recursive descent over balanced parentheses.
    auto parse = [&](auto&& self) -> RootedTree {
        if (pos >= enc.size() || enc[pos] != '(')
            throw ArgumentError("bad rooted tree encoding: " + enc);
        ++pos;
        RootedTree t;
        while (pos < enc.size() && enc[pos] == '(') t.children.push_back(self(self));
        if (pos >= enc.size() || enc[pos] != ')')
            throw ArgumentError("bad rooted tree encoding: " + enc);
        ++pos;
        return t;
    };
    RootedTree t = parse(parse);
    if (pos != enc.size()) throw ArgumentError("trailing bytes in rooted tree encoding: " + enc);
    return t;
}

int rooted_tree_size(const RootedTree& t) {
    int n = 0;
    for (const auto& c : t.children) n += 1 + rooted_tree_size(c);
    return n;
}

BigInt rooted_tree_aut_order(const RootedTree& t) {
    BigInt aut = 1;
    std::map<std::string, int> mult;
    for (const auto& c : t.children) {
        aut *= rooted_tree_aut_order(c);
        mult[encode_rooted_tree(c)] += 1;
    }
    for (const auto& [enc, m] : mult) aut *= factorial(static_cast<unsigned>(m));
    return aut;
}

namespace {

void attach_rec(const RootedTree& root, std::vector<int>& path, const RootedTree& node,
                std::vector<std::string>& out) {
    // Rebuild the whole tree with a new leaf under the node at `path`.
    auto rebuild = [&](auto&& self, const RootedTree& cur, std::size_t depth) -> RootedTree {
        RootedTree copy;
        copy.children.reserve(cur.children.size() + 1);
        for (std::size_t i = 0; i < cur.children.size(); ++i) {
            if (depth < path.size() && static_cast<int>(i) == path[depth])
                copy.children.push_back(self(self, cur.children[i], depth + 1));
            else
                copy.children.push_back(cur.children[i]);
        }
        if (depth == path.size()) copy.children.push_back(RootedTree{});
        return copy;
    };
    out.push_back(encode_rooted_tree(canonicalize_rooted_tree(rebuild(rebuild, root, 0))));
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        path.push_back(static_cast<int>(i));
        attach_rec(root, path, node.children[i], out);
        path.pop_back();
    }
}

}  // namespace

std::vector<std::string> attach_leaf_everywhere(const RootedTree& t) {
    std::vector<std::string> out;
    std::vector<int> path;
    attach_rec(t, path, t, out);
    return out;
}

std::vector<std::string> delete_each_leaf(const RootedTree& t) {
    std::vector<std::string> out;
    auto walk = [&](auto&& self, const RootedTree& root, std::vector<int>& path,
                    const RootedTree& node) -> void {
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            path.push_back(static_cast<int>(i));
            if (node.children[i].children.empty()) {
                auto rebuild = [&](auto&& rb, const RootedTree& cur, std::size_t depth) -> RootedTree {
                    RootedTree copy;
                    for (std::size_t j = 0; j < cur.children.size(); ++j) {
                        if (depth + 1 == path.size() && static_cast<int>(j) == path[depth]) continue;
                        if (depth < path.size() && static_cast<int>(j) == path[depth])
                            copy.children.push_back(rb(rb, cur.children[j], depth + 1));
                        else
                            copy.children.push_back(cur.children[j]);
                    }
                    return copy;
                };
                out.push_back(encode_rooted_tree(canonicalize_rooted_tree(rebuild(rebuild, root, 0))));
            } else {
                self(self, root, path, node.children[i]);
            }
            path.pop_back();
        }
    };
    std::vector<int> path;
    walk(walk, t, path, t);
    return out;
}

namespace {

BigInt hom_nodes(const RootedTree& p, const RootedTree& q);

/// Sum over injective assignments of p-children to q-children of the
/// product of subtree hom counts, by backtracking.
BigInt assign_children(const std::vector<RootedTree>& ps, const std::vector<RootedTree>& qs,
                       std::vector<bool>& used, std::size_t i) {
    if (i == ps.size()) return 1;
    BigInt total = 0;
    for (std::size_t j = 0; j < qs.size(); ++j) {
        if (used[j]) continue;
        BigInt sub = hom_nodes(ps[i], qs[j]);
        if (sub == 0) continue;
        used[j] = true;
        total += sub * assign_children(ps, qs, used, i + 1);
        used[j] = false;
    }
    return total;
}

BigInt hom_nodes(const RootedTree& p, const RootedTree& q) {
    if (p.children.size() > q.children.size()) return 0;
    std::vector<bool> used(q.children.size(), false);
    return assign_children(p.children, q.children, used, 0);
}

}  // namespace

BigInt rooted_tree_hom_count(const RootedTree& P, const RootedTree& Q) {
    return hom_nodes(P, Q);
}

}  // namespace updown
