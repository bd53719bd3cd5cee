#pragma once

#include <vector>

#include "gpkd/graph.hpp"

namespace testutil {

constexpr int kInf = 1 << 20;

// Independent distance oracle (Floyd–Warshall) to check the BFS matrix against.
inline std::vector<std::vector<int>> floyd_warshall(const gpkd::Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), kInf));
    for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    for (auto [u, v] : g.edges()) {
        d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (d[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)] +
                        d[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)] <
                    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                        d[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)] +
                        d[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)];
    return d;
}

// All labeled graphs on n vertices, one per edge-subset bitmask.
inline gpkd::Graph graph_from_mask(int n, unsigned mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) edges.emplace_back(u, v);
    return gpkd::build_graph(n, edges);
}

inline bool mask_connected(int n, unsigned mask) {
    gpkd::Graph g = graph_from_mask(n, mask);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

inline gpkd::VertexSet set_from_mask(int n, unsigned mask) {
    gpkd::VertexSet s;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.push_back(v);
    return s;
}

}  // namespace testutil
