#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpkd/distance.hpp"
#include "gpkd/graph.hpp"

namespace gpkd {

/// Evenly spread m-element subset of the cycle 0..n-1 with rotation r:
/// { floor((n*i + r) / m) : 0 <= i < m }. Requires 1 <= m <= n, 0 <= r < n.
inline VertexSet j_set(int n, int m, int r) {
    if (n < 1 || m < 1 || m > n) throw std::invalid_argument("j_set needs 1 <= m <= n");
    if (r < 0 || r >= n) throw std::invalid_argument("j_set needs 0 <= r < n");
    VertexSet a;
    a.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        a.push_back((n * i + r) / m);
    return a;  // ascending: consecutive gaps are at least floor(n/m) >= 1
}

/// Extremal path pattern: blocks of k-1 consecutive vertices every d+1 steps,
/// intersected with P_n. 1-based column c maps to path vertex c-1.
/// Requires k - 1 <= d (blocks must not chain into a short geodesic).
inline VertexSet path_block_set(int k, int d, int n) {
    if (k < 2) throw std::invalid_argument("path_block_set needs k >= 2");
    if (n < 1) throw std::invalid_argument("path_block_set needs n >= 1");
    if (d < k - 1) throw std::invalid_argument("path_block_set needs d >= k - 1");
    VertexSet s;
    for (int block = 0; (d + 1) * block + 1 <= n; ++block) {
        int first = (d + 1) * block + 1;
        int last = std::min(first + k - 2, n);
        for (int c = first; c <= last; ++c) s.push_back(c - 1);
    }
    return s;
}

namespace detail {
// 1-based thin-grid coordinates (column c in [1, n], row y in {1, 2}) to the
// prism/grid:Nx2 vertex id (c-1)*2 + (y-1).
inline int thin_grid_id(int c, int y) { return (c - 1) * 2 + (y - 1); }
}  // namespace detail

/// Zigzag pattern on P_n x P_2: blocks of 2k-3 consecutive columns every d
/// columns, one vertex per column, alternating rows within a block and
/// flipping phase between consecutive blocks. Requires d >= 2k-3.
inline VertexSet thin_grid_A(int k, int d, int n) {
    if (k < 2) throw std::invalid_argument("thin_grid_A needs k >= 2");
    if (n < 1) throw std::invalid_argument("thin_grid_A needs n >= 1");
    if (d < 2 * k - 3) throw std::invalid_argument("thin_grid_A needs d >= 2k - 3");
    VertexSet s;
    for (int block = 0; d * block + 1 <= n; ++block) {
        int width = std::min(2 * k - 3, n - d * block);
        for (int l = 1; l <= width; ++l) {
            int c = d * block + l;
            int y = ((l + block) % 2 != 0) ? 1 : 2;
            s.push_back(detail::thin_grid_id(c, y));
        }
    }
    std::sort(s.begin(), s.end());
    return s;
}

/// Full-column pattern on P_n x P_2: blocks of k-2 consecutive columns every d
/// columns, both rows of each column. Requires d >= k-2 and k >= 3; for k = 2
/// the blocks are empty and the empty set is returned.
inline VertexSet thin_grid_B(int k, int d, int n) {
    if (k < 2) throw std::invalid_argument("thin_grid_B needs k >= 2");
    if (n < 1) throw std::invalid_argument("thin_grid_B needs n >= 1");
    if (k == 2) return {};
    if (d < k - 2) throw std::invalid_argument("thin_grid_B needs d >= k - 2");
    VertexSet s;
    for (int block = 0; d * block + 1 <= n; ++block) {
        int width = std::min(k - 2, n - d * block);
        for (int l = 1; l <= width; ++l) {
            int c = d * block + l;
            s.push_back(detail::thin_grid_id(c, 1));
            s.push_back(detail::thin_grid_id(c, 2));
        }
    }
    std::sort(s.begin(), s.end());
    return s;
}

/// Diamond pattern in P_rows x P_cols around a 0-based center (ci, cj): all
/// vertices at L1 distance congruent to r mod 2 and at most r from the
/// center. Contains (r+1)^2 vertices; throws when it does not fit.
inline VertexSet diamond_set(int r, std::pair<int, int> center, int rows, int cols) {
    if (r < 0) throw std::invalid_argument("diamond_set needs r >= 0");
    if (rows < 1 || cols < 1) throw std::invalid_argument("diamond_set needs a nonempty grid");
    auto [ci, cj] = center;
    if (ci - r < 0 || ci + r >= rows || cj - r < 0 || cj + r >= cols)
        throw std::invalid_argument("diamond exceeds grid bounds");
    VertexSet s;
    for (int di = -r; di <= r; ++di)
        for (int dj = -(r - std::abs(di)); dj <= r - std::abs(di); ++dj) {
            int dist = std::abs(di) + std::abs(dj);
            if (dist % 2 == r % 2) s.push_back((ci + di) * cols + (cj + dj));
        }
    std::sort(s.begin(), s.end());
    return s;
}

/// A longest subsequence whose first coordinates never decrease and whose
/// second coordinates are entirely nondecreasing or entirely nonincreasing.
/// Patience DP over the second coordinate when the input is already sorted by
/// the first; quadratic componentwise DP otherwise.
inline std::vector<std::pair<int, int>> longest_monotone_subsequence(
    const std::vector<std::pair<int, int>>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n == 0) return {};

    bool x_sorted = true;
    for (int i = 0; i + 1 < n; ++i)
        if (pts[static_cast<std::size_t>(i + 1)].first < pts[static_cast<std::size_t>(i)].first)
            x_sorted = false;

    std::vector<int> best_chain;

    auto finish = [&](const std::vector<int>& chain) {
        if (chain.size() > best_chain.size()) best_chain = chain;
    };

    if (x_sorted) {
        // patience piles on y (ties allowed), one pass per orientation
        for (int orient = 0; orient < 2; ++orient) {
            std::vector<int> tail_value;  // smallest feasible pile tail
            std::vector<int> tail_index;
            std::vector<int> parent(static_cast<std::size_t>(n), -1);
            for (int i = 0; i < n; ++i) {
                int y = pts[static_cast<std::size_t>(i)].second * (orient == 0 ? 1 : -1);
                auto it = std::upper_bound(tail_value.begin(), tail_value.end(), y);
                std::size_t pos = static_cast<std::size_t>(it - tail_value.begin());
                if (pos == tail_value.size()) {
                    tail_value.push_back(y);
                    tail_index.push_back(i);
                } else {
                    tail_value[pos] = y;
                    tail_index[pos] = i;
                }
                parent[static_cast<std::size_t>(i)] = pos == 0 ? -1 : tail_index[pos - 1];
            }
            std::vector<int> chain;
            for (int i = tail_index.empty() ? -1 : tail_index.back(); i != -1;
                 i = parent[static_cast<std::size_t>(i)])
                chain.push_back(i);
            std::reverse(chain.begin(), chain.end());
            finish(chain);
        }
    } else {
        for (int orient = 0; orient < 2; ++orient) {
            std::vector<int> len(static_cast<std::size_t>(n), 1);
            std::vector<int> parent(static_cast<std::size_t>(n), -1);
            int best = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < i; ++j) {
                    bool ok_x = pts[static_cast<std::size_t>(j)].first <= pts[static_cast<std::size_t>(i)].first;
                    bool ok_y = orient == 0
                                    ? pts[static_cast<std::size_t>(j)].second <= pts[static_cast<std::size_t>(i)].second
                                    : pts[static_cast<std::size_t>(j)].second >= pts[static_cast<std::size_t>(i)].second;
                    if (ok_x && ok_y && len[static_cast<std::size_t>(j)] + 1 > len[static_cast<std::size_t>(i)]) {
                        len[static_cast<std::size_t>(i)] = len[static_cast<std::size_t>(j)] + 1;
                        parent[static_cast<std::size_t>(i)] = j;
                    }
                }
                if (len[static_cast<std::size_t>(i)] > len[static_cast<std::size_t>(best)]) best = i;
            }
            std::vector<int> chain;
            for (int i = best; i != -1; i = parent[static_cast<std::size_t>(i)]) chain.push_back(i);
            std::reverse(chain.begin(), chain.end());
            finish(chain);
        }
    }

    std::vector<std::pair<int, int>> out;
    out.reserve(best_chain.size());
    for (int i : best_chain) out.push_back(pts[static_cast<std::size_t>(i)]);
    return out;
}

/// True iff in the planar-labeled graph every monotone k-tuple of vertices
/// lies on a common geodesic. A tuple lies on a common geodesic iff for some
/// endpoint pair the distances from one endpoint sort the tuple with
/// telescoping additivity.
inline bool check_k_monotone_geodesic_labeling(const Graph& g, const DistMatrix& dm,
                                               const std::vector<std::pair<int, int>>& coords,
                                               int k) {
    if (k < 2) throw std::invalid_argument("labeling check needs k >= 2");
    if (static_cast<int>(coords.size()) != g.n())
        throw std::invalid_argument("labeling check needs one coordinate per vertex");

    auto monotone = [&](const std::vector<int>& tuple) {
        std::vector<std::pair<int, int>> p;
        for (int v : tuple) p.push_back(coords[static_cast<std::size_t>(v)]);
        std::sort(p.begin(), p.end());
        bool nondec = true, noninc = true;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i + 1].second < p[i].second) nondec = false;
        }
        std::sort(p.begin(), p.end(), [](auto a, auto b) {
            return a.first != b.first ? a.first < b.first : a.second > b.second;
        });
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i + 1].second > p[i].second) noninc = false;
        }
        return nondec || noninc;
    };

    auto on_common_geodesic = [&](const std::vector<int>& tuple) {
        for (int a : tuple) {
            for (int b : tuple) {
                // sort by distance from a; b must close the chain
                std::vector<int> t = tuple;
                std::sort(t.begin(), t.end(),
                          [&](int x, int y) { return dm(a, x) < dm(a, y); });
                if (t.front() != a || t.back() != b) continue;
                bool ok = true;
                int total = 0;
                for (std::size_t i = 0; i + 1 < t.size(); ++i) {
                    int step = dm(t[i], t[i + 1]);
                    if (step == DistMatrix::kUnreachable) { ok = false; break; }
                    total += step;
                }
                if (ok && dm(a, b) != DistMatrix::kUnreachable && total == dm(a, b)) return true;
            }
        }
        return false;
    };

    std::vector<int> tuple(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int start, int depth) -> bool {
        if (depth == k) {
            if (!monotone(tuple)) return true;
            return on_common_geodesic(tuple);
        }
        for (int v = start; v < g.n(); ++v) {
            tuple[static_cast<std::size_t>(depth)] = v;
            if (!self(self, v + 1, depth + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0);
}

/// Overload deriving coordinates from the grid/prism family tag.
inline bool check_k_monotone_geodesic_labeling(const Graph& g, const DistMatrix& dm, int k) {
    auto shape = family_grid_shape(g);
    if (!shape) throw std::invalid_argument("labeling check needs a grid-family graph");
    auto [a, b] = *shape;
    std::vector<std::pair<int, int>> coords;
    coords.reserve(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) coords.emplace_back(i, j);
    return check_k_monotone_geodesic_labeling(g, dm, coords, k);
}

}  // namespace gpkd
