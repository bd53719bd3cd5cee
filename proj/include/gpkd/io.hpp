#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "gpkd/graph.hpp"

namespace gpkd {

// Edge-list text format:
//   first data line:  n m
//   next m lines:     u v          (0-based endpoints)
// '#' starts a comment anywhere on a line; blank lines are skipped.
inline Graph read_edge_list(std::istream& in, std::string family_tag = {}) {
    std::string line;
    int n = -1;
    long m = -1;
    long seen = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                ls.clear();
                std::string stray;
                if (ls >> stray) throw std::invalid_argument("bad edge-list header: " + line);
                n = -1;
                continue;  // blank or comment-only line before the header
            }
            if (n <= 0 || m < 0) throw std::invalid_argument("bad edge-list header: " + line);
        } else {
            int u, v;
            if (!(ls >> u >> v)) {
                ls.clear();
                std::string stray;
                if (ls >> stray) throw std::invalid_argument("bad edge line: " + line);
                continue;
            }
            edges.emplace_back(u, v);
            ++seen;
        }
        std::string stray;
        if (ls >> stray) throw std::invalid_argument("trailing tokens on line: " + line);
    }
    if (n < 0) throw std::invalid_argument("edge list missing header");
    if (seen != m) throw std::invalid_argument("edge count does not match header");
    return build_graph(n, edges, std::move(family_tag));
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in, "file:" + path);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

/// Graphviz rendering; vertices in `marked` are drawn filled.
inline std::string to_dot(const Graph& g, const VertexSet& marked = {}) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << v;
        if (vs_contains(marked, v)) out << " [style=filled, fillcolor=black, fontcolor=white]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gpkd
