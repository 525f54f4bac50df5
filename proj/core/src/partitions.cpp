#include "updown/partitions.hpp"

#include <algorithm>

namespace updown {

std::string encode_partition(const Partition& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts[i]);
    }
    return out;
}

Partition parse_partition(const std::string& enc) {
    Partition parts;
    if (enc.empty()) return parts;
    std::size_t pos = 0;
    while (pos <= enc.size()) {
        std::size_t next = enc.find('+', pos);
        std::string tok = enc.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw ArgumentError("bad partition encoding: " + enc);
        parts.push_back(std::stoi(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (!is_valid_partition(parts)) throw ArgumentError("not weakly decreasing: " + enc);
    return parts;
}

bool is_valid_partition(const Partition& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

int partition_weight(const Partition& parts) {
    int w = 0;
    for (int p : parts) w += p;
    return w;
}

int multiplicity_of(const Partition& parts, int k) {
    return static_cast<int>(std::count(parts.begin(), parts.end(), k));
}

namespace {
void gen_partitions(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return encode_partition(a) < encode_partition(b);
    });
    return out;
}

std::vector<Partition> partition_covers(const Partition& lambda) {
    std::vector<Partition> covers;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        // Only the first part of a run of equal parts can grow.
        if (i > 0 && lambda[i] == lambda[i - 1]) continue;
        Partition mu = lambda;
        mu[i] += 1;
        covers.push_back(std::move(mu));
    }
    Partition mu = lambda;
    mu.push_back(1);
    covers.push_back(std::move(mu));
    return covers;
}

bool partition_contains(const Partition& mu, const Partition& lambda) {
    if (lambda.size() > mu.size()) return false;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] > mu[i]) return false;
    return true;
}

}  // namespace updown
