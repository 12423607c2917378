#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromsym {

// Integer partition: weakly decreasing list of positive parts. The empty
// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        if (!parts_.empty() && parts_.back() <= 0)
            throw std::invalid_argument("partition parts must be positive");
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    // Column lengths of the Young diagram, zeros removed.
    Partition transpose() const {
        Partition t;
        if (parts_.empty()) return t;
        for (int j = 1; j <= parts_[0]; ++j) {
            int col = 0;
            for (int p : parts_)
                if (p >= j) ++col;
            t.parts_.push_back(col);
        }
        return t;
    }

    // a_i = number of parts equal to i, keyed by part value; zero counts
    // are never stored.
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_) ++m[p];
        return m;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

// Canonical order: reverse lexicographic, so partitions_of(4) reads
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Fixes matrix row/column indexing
// everywhere.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return a.parts() > b.parts();
    }
};

namespace detail {

inline void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All partitions of N in canonical (reverse lexicographic) order; cached.
inline const std::vector<Partition>& partitions_of(int N) {
    if (N < 0) throw std::invalid_argument("partitions_of: negative N");
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::scoped_lock lk(mu);
    auto it = cache.find(N);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<int> cur;
        detail::gen_partitions(N, N, cur, out);
        if (N == 0) out = {Partition()};
        it = cache.emplace(N, std::move(out)).first;
    }
    return it->second;
}

// Dominance order on partitions of equal weight: mu <= lambda iff every
// prefix sum of mu is at most the corresponding prefix sum of lambda.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw std::invalid_argument("dominance_leq: weights differ");
    std::size_t len = std::max(mu.parts().size(), lambda.parts().size());
    long long su = 0, sl = 0;
    for (std::size_t i = 0; i < len; ++i) {
        su += i < mu.parts().size() ? mu.parts()[i] : 0;
        sl += i < lambda.parts().size() ? lambda.parts()[i] : 0;
        if (su > sl) return false;
    }
    return true;
}

}  // namespace chromsym
