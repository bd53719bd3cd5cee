#pragma once

#include <vector>

#include "gpkd/graph.hpp"

namespace gpkd {

// All-pairs shortest-path distances by BFS from every vertex.
// Unreachable pairs hold the dedicated sentinel kUnreachable; distances are
// never mixed into arithmetic without a reachability check first.
class DistMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistMatrix(const Graph& g)
        : n_(g.n()), d_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), kUnreachable) {
        std::vector<int> queue(static_cast<std::size_t>(n_));
        for (int src = 0; src < n_; ++src) {
            int* row = d_.data() + static_cast<std::size_t>(src) * n_;
            int head = 0, tail = 0;
            row[src] = 0;
            queue[tail++] = src;
            while (head < tail) {
                int u = queue[static_cast<std::size_t>(head++)];
                for (int v : g.neighbors(u)) {
                    if (row[v] == kUnreachable) {
                        row[v] = row[u] + 1;
                        queue[static_cast<std::size_t>(tail++)] = v;
                    }
                }
            }
        }
        diameter_ = 0;
        for (int x : d_)
            if (x > diameter_) diameter_ = x;
    }

    int n() const { return n_; }

    int operator()(int u, int v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }

    bool reachable(int u, int v) const { return (*this)(u, v) != kUnreachable; }

    const int* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }

    /// Largest finite distance; 0 for an edgeless graph.
    int diameter() const { return diameter_; }

    bool connected() const {
        for (int x : d_)
            if (x == kUnreachable) return false;
        return true;
    }

private:
    int n_;
    std::vector<int> d_;
    int diameter_;
};

inline DistMatrix distance_matrix(const Graph& g) { return DistMatrix(g); }

inline int diameter(const Graph& g) { return DistMatrix(g).diameter(); }

}  // namespace gpkd
