#pragma once

#include <random>

#include "gpkd/graph.hpp"

namespace gpkd {

// Platform-independent draw in [0, bound): uses raw mt19937 words so results
// do not depend on the standard library's distribution implementations.
inline int rand_below(std::mt19937& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint32_t>(bound));
}

/// Random connected graph: a random attachment tree plus each non-tree edge
/// independently with probability extra_edge_permille/1000.
inline Graph random_connected_graph(std::mt19937& rng, int n, int extra_edge_permille) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rand_below(rng, v), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_below(rng, 1000) < extra_edge_permille) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

/// Random graph without a connectivity guarantee (may be disconnected).
inline Graph random_graph(std::mt19937& rng, int n, int edge_permille) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_below(rng, 1000) < edge_permille) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

}  // namespace gpkd
