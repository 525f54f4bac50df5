#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oracles {

namespace {

std::string join_label(const std::vector<int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

}  // namespace

BigInt partition_count(int n) {
    // p(n, k) = partitions of n into parts <= k.
    std::vector<std::vector<BigInt>> p(static_cast<std::size_t>(n) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][static_cast<std::size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)];
            if (m >= k)
                p[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] +=
                    p[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)];
        }
    return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

BigInt catalan(int n) {
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int i = 0; i < m; ++i)
            c[static_cast<std::size_t>(m)] +=
                c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    return c[static_cast<std::size_t>(n)];
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

namespace {
int euler_phi(int d) {
    int result = d;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}
}  // namespace

BigInt necklace_count(int m, int c) {
    if (m == 0) return 1;
    BigInt total = 0;
    for (int d = 1; d <= m; ++d) {
        if (m % d) continue;
        BigInt power = 1;
        for (int i = 0; i < m / d; ++i) power *= c;
        total += BigInt(euler_phi(d)) * power;
    }
    return total / m;
}

BigInt rooted_tree_count(int n) {
    // a(k) = rooted trees with k vertices; answer is a(n+1).
    const int N = n + 1;
    std::vector<BigInt> a(static_cast<std::size_t>(N) + 1, 0);
    a[1] = 1;
    for (int k = 2; k <= N; ++k) {
        BigInt sum = 0;
        for (int j = 1; j < k; ++j) {
            BigInt inner = 0;  // sum over d|j of d*a(d)
            for (int d = 1; d <= j; ++d)
                if (j % d == 0) inner += BigInt(d) * a[static_cast<std::size_t>(d)];
            sum += inner * a[static_cast<std::size_t>(k - j)];
        }
        a[static_cast<std::size_t>(k)] = sum / (k - 1);
    }
    return a[static_cast<std::size_t>(N)];
}

BigInt involutions(int n) {
    BigInt prev2 = 1, prev1 = 1;  // I(0), I(1)
    if (n == 0) return 1;
    if (n == 1) return 1;
    BigInt cur = 0;
    for (int k = 2; k <= n; ++k) {
        cur = prev1 + BigInt(k - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

std::set<std::string> all_syt_labels(int n) {
    std::set<std::string> out;
    // rows[r] collects the values placed in row r; value v may extend row r
    // when the row above is strictly longer.
    std::vector<std::vector<int>> rows;
    std::function<void(int)> place = [&](int v) {
        if (v > n) {
            std::string label = "[";
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r) label += ',';
                label += join_label(rows[r]);
            }
            out.insert(label + "]");
            return;
        }
        for (std::size_t r = 0; r <= rows.size(); ++r) {
            if (r == rows.size()) {
                rows.emplace_back();
                rows.back().push_back(v);
                place(v + 1);
                rows.pop_back();
                break;  // a new row can only be opened once
            }
            if (r > 0 && rows[r].size() >= rows[r - 1].size()) continue;
            rows[r].push_back(v);
            place(v + 1);
            rows[r].pop_back();
        }
    };
    place(1);
    return out;
}

std::set<std::string> all_cayley_labels(int n) {
    std::set<std::string> out;
    std::vector<int> seq(static_cast<std::size_t>(n), 1);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            int mx = 0;
            for (int v : seq) mx = std::max(mx, v);
            for (int j = 1; j <= mx; ++j)
                if (std::count(seq.begin(), seq.end(), j) == 0) return;
            out.insert(join_label(seq));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            seq[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    if (n == 0) {
        out.insert("[]");
        return out;
    }
    rec(0);
    return out;
}

std::set<std::string> all_multiset_perm_labels(int n) {
    std::vector<int> seq;
    for (int v = 1; v <= n; ++v) {
        seq.push_back(v);
        seq.push_back(v);
    }
    std::sort(seq.begin(), seq.end());
    std::set<std::string> out;
    do {
        bool ok = true;
        for (std::size_t j = 0; j < seq.size() && ok; ++j)
            for (std::size_t i = 0; i < j && ok; ++i) {
                if (seq[i] <= seq[j]) continue;
                bool witness = false;
                for (std::size_t k = 0; k < j; ++k)
                    if (k != i && seq[k] == seq[i]) witness = true;
                if (!witness) ok = false;
            }
        if (ok) out.insert(join_label(seq));
    } while (std::next_permutation(seq.begin(), seq.end()));
    if (n == 0) out.insert("[]");
    return out;
}

std::set<std::string> all_ordered_set_partition_labels(int n) {
    std::set<std::string> out;
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            // Canonical order: sizes weakly decreasing, ties by max ascending.
            auto sorted = blocks;
            std::stable_sort(sorted.begin(), sorted.end(),
                             [](const std::vector<int>& a, const std::vector<int>& b) {
                                 if (a.size() != b.size()) return a.size() > b.size();
                                 return a.back() < b.back();
                             });
            std::string label = "[";
            for (std::size_t b = 0; b < sorted.size(); ++b) {
                if (b) label += ',';
                label += '{';
                for (std::size_t i = 0; i < sorted[b].size(); ++i) {
                    if (i) label += ',';
                    label += std::to_string(sorted[b][i]);
                }
                label += '}';
            }
            out.insert(label + "]");
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(v);
            rec(v + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({v});
        rec(v + 1);
        blocks.pop_back();
    };
    rec(1);
    return out;
}

std::set<std::string> all_decreasing_multiplicity_labels(int n) {
    std::set<std::string> out;
    if (n == 0) {
        out.insert("[]");
        return out;
    }
    std::vector<int> seq(static_cast<std::size_t>(n), 1);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            for (int v = 1; v < n; ++v)
                if (std::count(seq.begin(), seq.end(), v) <
                    std::count(seq.begin(), seq.end(), v + 1))
                    return;
            out.insert(join_label(seq));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            seq[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

namespace {

struct FlatTree {
    std::vector<int> parent;  // parent[0] = -1 for the root
};

FlatTree flatten(const std::string& enc) {
    FlatTree t;
    std::vector<int> stack;
    int next = -1;
    for (char ch : enc) {
        if (ch == '(') {
            int id = ++next;
            t.parent.push_back(stack.empty() ? -1 : stack.back());
            stack.push_back(id);
        } else {
            stack.pop_back();
        }
    }
    return t;
}

}  // namespace

BigInt brute_force_tree_aut(const std::string& enc) {
    FlatTree t = flatten(enc);
    const int n = static_cast<int>(t.parent.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    BigInt count = 0;
    do {
        if (perm[0] != 0) continue;  // root fixed
        bool ok = true;
        for (int v = 1; v < n && ok; ++v)
            if (perm[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(v)])] !=
                t.parent[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])])
                ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

BigInt brute_force_partition_aut(const std::vector<int>& parts) {
    std::vector<int> perm(parts.size());
    std::iota(perm.begin(), perm.end(), 0);
    BigInt count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < parts.size() && ok; ++i)
            if (parts[i] != parts[static_cast<std::size_t>(perm[i])]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace oracles
