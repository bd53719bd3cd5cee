#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpkd {

/// Ordered set of vertex indices: sorted ascending, no duplicates.
using VertexSet = std::vector<int>;

inline bool vs_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

/// Sorts, deduplicates, and range-checks a vertex list against a graph of n vertices.
inline VertexSet normalized_vertex_set(VertexSet s, int n) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && (s.front() < 0 || s.back() >= n))
        throw std::invalid_argument("vertex index out of range");
    return s;
}

inline VertexSet all_vertices(int n) {
    VertexSet s(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) s[static_cast<std::size_t>(v)] = v;
    return s;
}

// Immutable simple undirected graph on vertices 0..n-1.
// Adjacency lists are sorted ascending and symmetric; no self-loops.
class Graph {
public:
    Graph(int n, std::vector<std::vector<int>> adjacency, std::string family_tag)
        : n_(n), adj_(std::move(adjacency)), family_tag_(std::move(family_tag)) {}

    int n() const { return n_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& a : adj_) twice += a.size();
        return twice / 2;
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(edge_count());
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) e.emplace_back(u, v);
        return e;
    }

    /// Provenance label such as "path:14" or "grid:3x4"; empty for ad-hoc graphs.
    const std::string& family_tag() const { return family_tag_; }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::string family_tag_;
};

/// Builds a graph from an edge list. Rejects self-loops, out-of-range
/// endpoints, and n <= 0; duplicate edges are merged.
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                         std::string family_tag = {}) {
    if (n <= 0) throw std::invalid_argument("vertex count must be positive");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return Graph(n, std::move(adj), std::move(family_tag));
}

namespace detail {

inline int parse_positive_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + ": " + s);
    }
    if (pos != s.size() || value <= 0)
        throw std::invalid_argument(std::string("bad ") + what + ": " + s);
    return value;
}

inline std::pair<int, int> parse_dims(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("expected AxB dimensions: " + s);
    return {parse_positive_int(s.substr(0, x), "dimension"),
            parse_positive_int(s.substr(x + 1), "dimension")};
}

}  // namespace detail

// Cartesian product of two factor graphs given implicitly: vertex (i, j) with
// 0 <= i < a, 0 <= j < b maps to id i*b + j. Used by grid/cylinder/torus.
inline int grid_vertex_id(int i, int j, int b) { return i * b + j; }

/// Builds a named graph family from a descriptor:
///   path:N cycle:N complete:N grid:AxB prism:N cylinder:AxB torus:AxB
/// Grid-like families use the vertex bijection (i, j) -> i*B + j with 0-based
/// i < A, j < B; the 1-based convention (i, j) used in thin-grid constructions
/// maps via (i, j) -> (i-1)*B + (j-1). prism:N is grid:Nx2 under that labeling.
inline Graph build_family(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family descriptor needs name:params, got " + descriptor);
    const std::string name = descriptor.substr(0, colon);
    const std::string params = descriptor.substr(colon + 1);
    std::vector<std::pair<int, int>> e;

    auto add_grid_edges = [&e](int a, int b, bool wrap_a, bool wrap_b) {
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) {
                if (i + 1 < a) e.emplace_back(grid_vertex_id(i, j, b), grid_vertex_id(i + 1, j, b));
                else if (wrap_a) e.emplace_back(grid_vertex_id(i, j, b), grid_vertex_id(0, j, b));
                if (j + 1 < b) e.emplace_back(grid_vertex_id(i, j, b), grid_vertex_id(i, j + 1, b));
                else if (wrap_b) e.emplace_back(grid_vertex_id(i, j, b), grid_vertex_id(i, 0, b));
            }
    };

    if (name == "path") {
        int n = detail::parse_positive_int(params, "path length");
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        return build_graph(n, e, "path:" + std::to_string(n));
    }
    if (name == "cycle") {
        int n = detail::parse_positive_int(params, "cycle length");
        if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        return build_graph(n, e, "cycle:" + std::to_string(n));
    }
    if (name == "complete") {
        int n = detail::parse_positive_int(params, "vertex count");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
        return build_graph(n, e, "complete:" + std::to_string(n));
    }
    if (name == "grid") {
        auto [a, b] = detail::parse_dims(params);
        add_grid_edges(a, b, false, false);
        return build_graph(a * b, e, "grid:" + std::to_string(a) + "x" + std::to_string(b));
    }
    if (name == "prism") {
        int n = detail::parse_positive_int(params, "prism length");
        add_grid_edges(n, 2, false, false);
        return build_graph(2 * n, e, "prism:" + std::to_string(n));
    }
    if (name == "cylinder") {
        auto [a, b] = detail::parse_dims(params);
        if (b < 3) throw std::invalid_argument("cylinder cycle factor needs at least 3 vertices");
        add_grid_edges(a, b, false, true);
        return build_graph(a * b, e, "cylinder:" + std::to_string(a) + "x" + std::to_string(b));
    }
    if (name == "torus") {
        auto [a, b] = detail::parse_dims(params);
        if (a < 3 || b < 3) throw std::invalid_argument("torus factors need at least 3 vertices");
        add_grid_edges(a, b, true, true);
        return build_graph(a * b, e, "torus:" + std::to_string(a) + "x" + std::to_string(b));
    }
    throw std::invalid_argument("unknown family: " + name);
}

/// Grid shape (A, B) recovered from the family tag, for graphs built as
/// grid:AxB or prism:N (= Nx2). Empty for every other graph.
inline std::optional<std::pair<int, int>> family_grid_shape(const Graph& g) {
    const std::string& tag = g.family_tag();
    auto colon = tag.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string name = tag.substr(0, colon);
    if (name == "grid") {
        auto [a, b] = detail::parse_dims(tag.substr(colon + 1));
        return std::make_pair(a, b);
    }
    if (name == "prism") {
        int n = detail::parse_positive_int(tag.substr(colon + 1), "prism length");
        return std::make_pair(n, 2);
    }
    return std::nullopt;
}

}  // namespace gpkd
