#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gpkd/distance.hpp"
#include "gpkd/graph.hpp"

namespace gpkd {

// The union of all u-v geodesics, layered by distance from u. A vertex x lies
// on some u-v geodesic iff d(u,x) + d(x,v) = d(u,v); dag edges advance one BFS
// layer toward v.
struct GeodesicDag {
    int source = -1;
    int sink = -1;
    int length = 0;
    std::vector<int> vertices;             // layer-major order, ties by id; front()==source, back()==sink
    std::vector<int> layer;                // layer[i] = d(source, vertices[i])
    std::vector<std::vector<int>> preds;   // indices into `vertices` one layer back

    int size() const { return static_cast<int>(vertices.size()); }
};

inline GeodesicDag geodesic_dag(const Graph& g, const DistMatrix& dm, int u, int v) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
        throw std::invalid_argument("vertex index out of range");
    if (!dm.reachable(u, v)) throw std::invalid_argument("endpoints are not connected");
    const int* du = dm.row(u);
    const int* dv = dm.row(v);
    const int len = du[v];

    GeodesicDag dag;
    dag.source = u;
    dag.sink = v;
    dag.length = len;
    // bucket by layer; vertex ids ascend within a bucket by construction
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(len) + 1);
    for (int x = 0; x < g.n(); ++x)
        if (du[x] != DistMatrix::kUnreachable && dv[x] != DistMatrix::kUnreachable &&
            du[x] + dv[x] == len)
            buckets[static_cast<std::size_t>(du[x])].push_back(x);
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (const auto& b : buckets)
        for (int x : b) {
            local[static_cast<std::size_t>(x)] = dag.size();
            dag.vertices.push_back(x);
            dag.layer.push_back(du[x]);
        }
    dag.preds.resize(dag.vertices.size());
    for (int i = 0; i < dag.size(); ++i) {
        int x = dag.vertices[static_cast<std::size_t>(i)];
        for (int y : g.neighbors(x)) {
            int ly = local[static_cast<std::size_t>(y)];
            if (ly >= 0 && dag.layer[static_cast<std::size_t>(ly)] == dag.layer[static_cast<std::size_t>(i)] - 1)
                dag.preds[static_cast<std::size_t>(i)].push_back(ly);
        }
    }
    return dag;
}

/// Maximum number of vertices of s lying on a single source-sink geodesic:
/// a longest-path DP over the dag in layer order.
inline int max_marked_on_geodesic(const GeodesicDag& dag, const VertexSet& s) {
    std::vector<int> dp(dag.vertices.size(), 0);
    for (int i = 0; i < dag.size(); ++i) {
        int best_pred = 0;
        for (int p : dag.preds[static_cast<std::size_t>(i)])
            if (dp[static_cast<std::size_t>(p)] > best_pred) best_pred = dp[static_cast<std::size_t>(p)];
        dp[static_cast<std::size_t>(i)] =
            best_pred + (vs_contains(s, dag.vertices[static_cast<std::size_t>(i)]) ? 1 : 0);
    }
    return dp.back();
}

/// One concrete geodesic, as the full vertex sequence from u to v.
struct GeodesicWitness {
    int u = -1;
    int v = -1;
    std::vector<int> vertices;  // vertices[0] == u, vertices.back() == v
    int count_in_s = 0;         // marked vertices on it, when a marked set is in play

    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct EnumerationLimitExceeded : std::runtime_error {
    EnumerationLimitExceeded() : std::runtime_error("geodesic enumeration limit exceeded") {}
};

/// Every u-v geodesic, in lexicographic order of the vertex sequence.
/// Throws EnumerationLimitExceeded once more than `limit` are found.
inline std::vector<GeodesicWitness> enumerate_geodesics(const Graph& g, const DistMatrix& dm,
                                                        int u, int v,
                                                        std::uint64_t limit = 1000000) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
        throw std::invalid_argument("vertex index out of range");
    if (!dm.reachable(u, v)) throw std::invalid_argument("endpoints are not connected");
    const int* du = dm.row(u);
    const int* dv = dm.row(v);
    const int len = du[v];

    std::vector<GeodesicWitness> out;
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(len) + 1);
    auto descend = [&](auto&& self, int x) -> void {
        path.push_back(x);
        if (x == v) {
            if (out.size() >= limit) throw EnumerationLimitExceeded();
            out.push_back(GeodesicWitness{u, v, path, 0});
        } else {
            for (int y : g.neighbors(x))
                if (du[y] == du[x] + 1 && dv[y] != DistMatrix::kUnreachable && du[y] + dv[y] == len)
                    self(self, y);
        }
        path.pop_back();
    };
    descend(descend, u);
    return out;
}

/// True iff the subgraph induced on x preserves all distances of g.
inline bool is_isometric_subgraph(const Graph& g, const DistMatrix& dm, const VertexSet& x_in) {
    VertexSet x = normalized_vertex_set(x_in, g.n());
    const int m = static_cast<int>(x.size());
    if (m <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)])) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
    std::vector<int> dist(static_cast<std::size_t>(m));
    std::vector<int> queue(static_cast<std::size_t>(m));
    for (int src = 0; src < m; ++src) {
        std::fill(dist.begin(), dist.end(), DistMatrix::kUnreachable);
        int head = 0, tail = 0;
        dist[static_cast<std::size_t>(src)] = 0;
        queue[static_cast<std::size_t>(tail++)] = src;
        while (head < tail) {
            int a = queue[static_cast<std::size_t>(head++)];
            for (int b : adj[static_cast<std::size_t>(a)])
                if (dist[static_cast<std::size_t>(b)] == DistMatrix::kUnreachable) {
                    dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
                    queue[static_cast<std::size_t>(tail++)] = b;
                }
        }
        for (int j = 0; j < m; ++j)
            if (dist[static_cast<std::size_t>(j)] != dm(x[static_cast<std::size_t>(src)], x[static_cast<std::size_t>(j)]))
                return false;
    }
    return true;
}

/// True iff x contains every vertex of every geodesic between members of x.
inline bool is_convex_subgraph(const Graph& g, const DistMatrix& dm, const VertexSet& x_in) {
    VertexSet x = normalized_vertex_set(x_in, g.n());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            int a = x[i], b = x[j];
            int len = dm(a, b);
            if (len == DistMatrix::kUnreachable) continue;
            for (int w = 0; w < g.n(); ++w) {
                if (vs_contains(x, w)) continue;
                if (dm(a, w) != DistMatrix::kUnreachable && dm(w, b) != DistMatrix::kUnreachable &&
                    dm(a, w) + dm(w, b) == len)
                    return false;
            }
        }
    return true;
}

/// Two disjoint nonempty vertex sets are parallel when every cross distance
/// equals the minimum cross distance.
inline bool are_parallel(const Graph& g, const DistMatrix& dm, const VertexSet& x1_in,
                         const VertexSet& x2_in) {
    VertexSet x1 = normalized_vertex_set(x1_in, g.n());
    VertexSet x2 = normalized_vertex_set(x2_in, g.n());
    if (x1.empty() || x2.empty()) throw std::invalid_argument("parallel test needs nonempty sets");
    for (int a : x1)
        if (vs_contains(x2, a)) throw std::invalid_argument("parallel test needs disjoint sets");
    bool first = true;
    int ref = 0;
    for (int a : x1)
        for (int b : x2) {
            int d = dm(a, b);
            if (first) {
                ref = d;
                first = false;
            } else if (d != ref) {
                return false;
            }
        }
    return true;
}

}  // namespace gpkd
