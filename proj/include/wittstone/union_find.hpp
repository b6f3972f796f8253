#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace wittstone {

/// Disjoint-set forest with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

    std::size_t count() {
        std::size_t c = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i) ++c;
        return c;
    }

    /// Canonical class ids: classes numbered by smallest member, in order.
    std::vector<std::size_t> canonical_classes() {
        std::vector<std::size_t> rep(parent_.size());
        std::vector<std::size_t> id(parent_.size(), SIZE_MAX);
        std::size_t next = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            std::size_t r = find(i);
            if (id[r] == SIZE_MAX) id[r] = next++;
            rep[i] = id[r];
        }
        return rep;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace wittstone
