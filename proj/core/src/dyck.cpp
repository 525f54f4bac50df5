#include "updown/dyck.hpp"

#include <algorithm>

namespace updown {

bool is_dyck_word(const std::string& w) {
    int height = 0;
    for (char ch : w) {
        if (ch == 'U')
            ++height;
        else if (ch == 'D')
            --height;
        else
            return false;
        if (height < 0) return false;
    }
    return height == 0;
}

namespace {
void gen_dyck(int open_left, int height, std::string& cur, std::vector<std::string>& out) {
    if (open_left == 0 && height == 0) {
        out.push_back(cur);
        return;
    }
    if (open_left > 0) {
        cur.push_back('U');
        gen_dyck(open_left - 1, height + 1, cur, out);
        cur.pop_back();
    }
    if (height > 0) {
        cur.push_back('D');
        gen_dyck(open_left, height - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::string> dyck_words_of(int n) {
    std::vector<std::string> out;
    std::string cur;
    gen_dyck(n, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

int dyck_leaf_count(const std::string& w) {
    int leaves = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 'U' && w[i + 1] == 'D') ++leaves;
    return leaves;
}

std::string dyck_insert_pair(const std::string& w, int pos) {
    if (pos < 0 || static_cast<std::size_t>(pos) > w.size())
        throw ArgumentError("dyck_insert_pair: position out of range");
    std::string out = w;
    out.insert(static_cast<std::size_t>(pos), "UD");
    return out;
}

std::vector<int> dyck_insert_positions(const std::string& w, const std::string& target) {
    std::vector<int> positions;
    if (target.size() != w.size() + 2) return positions;
    for (int pos = 0; pos <= static_cast<int>(w.size()); ++pos)
        if (dyck_insert_pair(w, pos) == target) positions.push_back(pos);
    return positions;
}

}  // namespace updown
