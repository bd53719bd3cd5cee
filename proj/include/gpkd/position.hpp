#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gpkd/geodesy.hpp"

namespace gpkd {

/// Parameters of the k-general d-position predicate: a set S is in k-general
/// d-position when every geodesic carrying at least k vertices of S is longer
/// than d. Requires k >= 2 and d >= 1.
struct PositionParams {
    int k;
    int d;

    PositionParams(int k_, int d_) : k(k_), d(d_) {
        if (k < 2) throw std::invalid_argument("k must be at least 2");
        if (d < 1) throw std::invalid_argument("d must be at least 1");
    }
};

/// Distances above the diameter never constrain anything, so d is clamped.
inline int effective_d(const DistMatrix& dm, const PositionParams& p) {
    return std::min(p.d, dm.diameter());
}

// A geodesic with >= k marked vertices restricts, between its first and last
// marked vertex, to a geodesic with the same marked vertices and both
// endpoints marked. It therefore suffices to run the per-pair DP over marked
// endpoint pairs whose distance lies in [k-1, d] (a geodesic of length L has
// only L+1 vertices).
inline bool is_kgdp(const Graph& g, const DistMatrix& dm, const VertexSet& s_in,
                    const PositionParams& p) {
    VertexSet s = normalized_vertex_set(s_in, g.n());
    if (static_cast<int>(s.size()) < p.k) return true;
    const int d_eff = effective_d(dm, p);
    if (d_eff < p.k - 1) return true;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            int len = dm(s[i], s[j]);
            if (len == DistMatrix::kUnreachable || len < p.k - 1 || len > d_eff) continue;
            if (max_marked_on_geodesic(geodesic_dag(g, dm, s[i], s[j]), s) >= p.k) return false;
        }
    return true;
}

/// A concrete geodesic violating k-general d-position.
struct Violation {
    GeodesicWitness witness;  // count_in_s >= k and length() <= d
};

/// Empty when s is in k-general d-position; otherwise one violating geodesic,
/// reconstructed from the first offending marked pair in sorted order.
inline std::optional<Violation> find_violation(const Graph& g, const DistMatrix& dm,
                                               const VertexSet& s_in, const PositionParams& p) {
    VertexSet s = normalized_vertex_set(s_in, g.n());
    if (static_cast<int>(s.size()) < p.k) return std::nullopt;
    const int d_eff = effective_d(dm, p);
    if (d_eff < p.k - 1) return std::nullopt;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            int len = dm(s[i], s[j]);
            if (len == DistMatrix::kUnreachable || len < p.k - 1 || len > d_eff) continue;
            GeodesicDag dag = geodesic_dag(g, dm, s[i], s[j]);
            std::vector<int> dp(dag.vertices.size(), 0);
            for (int t = 0; t < dag.size(); ++t) {
                int best_pred = 0;
                for (int q : dag.preds[static_cast<std::size_t>(t)])
                    if (dp[static_cast<std::size_t>(q)] > best_pred)
                        best_pred = dp[static_cast<std::size_t>(q)];
                dp[static_cast<std::size_t>(t)] =
                    best_pred + (vs_contains(s, dag.vertices[static_cast<std::size_t>(t)]) ? 1 : 0);
            }
            if (dp.back() < p.k) continue;
            // walk maximizing predecessors back from the sink
            std::vector<int> seq;
            int cur = dag.size() - 1;
            seq.push_back(dag.vertices[static_cast<std::size_t>(cur)]);
            while (cur != 0) {
                int want = dp[static_cast<std::size_t>(cur)] -
                           (vs_contains(s, dag.vertices[static_cast<std::size_t>(cur)]) ? 1 : 0);
                int next = -1;
                for (int q : dag.preds[static_cast<std::size_t>(cur)])
                    if (dp[static_cast<std::size_t>(q)] == want && (next == -1 || q < next)) next = q;
                cur = next;
                seq.push_back(dag.vertices[static_cast<std::size_t>(cur)]);
            }
            std::reverse(seq.begin(), seq.end());
            GeodesicWitness w;
            w.u = s[i];
            w.v = s[j];
            w.vertices = std::move(seq);
            w.count_in_s = dp.back();
            return Violation{std::move(w)};
        }
    return std::nullopt;
}

// ---- circular spectra ----------------------------------------------------

struct SpectrumMultiset {
    enum class Kind { clockwise, geodesic };
    int span = 0;
    Kind kind = Kind::clockwise;
    std::vector<int> values;  // sorted ascending, one entry per ordered span-pair

    std::vector<int> support() const {
        std::vector<int> sup = values;
        sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
        return sup;
    }
};

namespace detail {
inline VertexSet checked_circular_set(int n, const VertexSet& a_in) {
    if (n < 1) throw std::invalid_argument("cycle order must be positive");
    VertexSet a = normalized_vertex_set(a_in, n);
    if (a.size() != a_in.size())
        throw std::invalid_argument("circular set must not contain duplicates");
    return a;
}
}  // namespace detail

/// Multiset of clockwise distances (a_{i+span mod m} - a_i) mod n on the
/// cycle 0..n-1, one per ordered span-pair.
inline SpectrumMultiset clockwise_spectrum(int n, const VertexSet& a_in, int span) {
    VertexSet a = detail::checked_circular_set(n, a_in);
    const int m = static_cast<int>(a.size());
    if (m < 2) throw std::invalid_argument("spectrum needs at least two elements");
    if (span < 1 || span > m - 1) throw std::invalid_argument("span must lie in [1, m-1]");
    SpectrumMultiset out;
    out.span = span;
    out.kind = SpectrumMultiset::Kind::clockwise;
    out.values.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int j = (i + span) % m;
        int diff = a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)];
        out.values.push_back(((diff % n) + n) % n);
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

/// Same pairs measured by cycle geodesic distance min(c, n-c).
inline SpectrumMultiset geodesic_spectrum(int n, const VertexSet& a_in, int span) {
    SpectrumMultiset out = clockwise_spectrum(n, a_in, span);
    out.kind = SpectrumMultiset::Kind::geodesic;
    for (int& c : out.values) c = std::min(c, n - c);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

/// Maximal evenness on the cycle 0..n-1: every span's clockwise support is
/// one integer or two consecutive integers. Singletons are trivially even.
inline bool is_maximally_even(int n, const VertexSet& a_in) {
    VertexSet a = detail::checked_circular_set(n, a_in);
    if (a.empty()) throw std::invalid_argument("maximal evenness needs a nonempty set");
    const int m = static_cast<int>(a.size());
    for (int span = 1; span <= m - 1; ++span) {
        auto sup = clockwise_spectrum(n, a, span).support();
        if (sup.size() > 2) return false;
        if (sup.size() == 2 && sup[1] != sup[0] + 1) return false;
    }
    return true;
}

// ---- structural characterization for k = 3 --------------------------------

// For connected g and d >= 2, S is in 3-general d-position iff
//   (1) the subgraph induced on S is a disjoint union of cliques,
//   (2) non-parallel clique pairs are at distance >= d, and
//   (3) whenever clique distances satisfy D(i,j) + D(j,k) = D(i,k),
//       the outer distance D(i,k) exceeds d.
inline bool check_structure_general_d_position(const Graph& g, const DistMatrix& dm,
                                               const VertexSet& s_in, int d) {
    if (d < 2) throw std::invalid_argument("structure characterization needs d >= 2");
    if (!dm.connected()) throw std::invalid_argument("structure characterization needs a connected graph");
    VertexSet s = normalized_vertex_set(s_in, g.n());
    if (s.size() <= 1) return true;

    // connected components of the induced subgraph
    std::vector<int> comp(s.size(), -1);
    std::vector<std::size_t> stack;
    int ncomp = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = ncomp;
        stack.push_back(i);
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < s.size(); ++b)
                if (comp[b] < 0 && g.has_edge(s[a], s[b])) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
        }
        ++ncomp;
    }
    std::vector<VertexSet> cliques(static_cast<std::size_t>(ncomp));
    for (std::size_t i = 0; i < s.size(); ++i)
        cliques[static_cast<std::size_t>(comp[i])].push_back(s[i]);

    // (1) each component must be complete
    for (const auto& q : cliques)
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = i + 1; j < q.size(); ++j)
                if (!g.has_edge(q[i], q[j])) return false;

    std::vector<std::vector<int>> cd(static_cast<std::size_t>(ncomp),
                                     std::vector<int>(static_cast<std::size_t>(ncomp), 0));
    for (int i = 0; i < ncomp; ++i)
        for (int j = i + 1; j < ncomp; ++j) {
            int mn = dm.diameter();
            for (int a : cliques[static_cast<std::size_t>(i)])
                for (int b : cliques[static_cast<std::size_t>(j)]) mn = std::min(mn, dm(a, b));
            cd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mn;
            cd[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = mn;
        }

    // (2) non-parallel pairs must be far apart
    for (int i = 0; i < ncomp; ++i)
        for (int j = i + 1; j < ncomp; ++j)
            if (!are_parallel(g, dm, cliques[static_cast<std::size_t>(i)],
                              cliques[static_cast<std::size_t>(j)]) &&
                cd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < d)
                return false;

    // (3) additive triples must overshoot d on the outer distance
    for (int i = 0; i < ncomp; ++i)
        for (int k = i + 1; k < ncomp; ++k)
            for (int j = 0; j < ncomp; ++j) {
                if (j == i || j == k) continue;
                if (cd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                        cd[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] ==
                    cd[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    cd[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] <= d)
                    return false;
            }
    return true;
}

}  // namespace gpkd
