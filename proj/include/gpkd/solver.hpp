#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gpkd/families.hpp"
#include "gpkd/position.hpp"

namespace gpkd {

enum class SolveMethod { brute, branch_and_bound };

struct SolveResult {
    int value = 0;
    VertexSet witness;  // passes is_kgdp, |witness| == value
    SolveMethod method = SolveMethod::brute;
    std::uint64_t nodes_explored = 0;
    int effective_d = 0;
};

struct BudgetExhausted : std::runtime_error {
    std::uint64_t nodes;
    explicit BudgetExhausted(std::uint64_t nodes_)
        : std::runtime_error("search budget exhausted"), nodes(nodes_) {}
};

namespace detail {

inline void require_solver_size(const Graph& g) {
    if (g.n() > 64) throw std::invalid_argument("exact solvers support at most 64 vertices");
}

// Feasibility along the search tree is incremental: the current set S is
// feasible, so a violating geodesic for S + v must contain v, and between its
// first and last marked vertex it restricts to one with marked endpoints
// (a, b) in S + v, length in [k-1, d], and v on an a-b geodesic. Only those
// pairs need the DP.

// Per-pair geodesic-DAG DP evaluated straight off the distance matrix.
// Scratch buffers are caller-owned so the hot loop never allocates.
struct PairScratch {
    std::vector<int> count;  // per layer
    std::vector<int> start;
    std::vector<int> order;  // dag vertices, layer-major
    std::vector<int> dp;     // per vertex id
};

inline int max_marked_flat(const Graph& g, const DistMatrix& dm, int a, int b,
                           std::uint64_t mask, int k, PairScratch& sc) {
    const int* da = dm.row(a);
    const int* db = dm.row(b);
    const int len = da[b];
    const int n = dm.n();
    sc.count.assign(static_cast<std::size_t>(len) + 1, 0);
    sc.order.resize(static_cast<std::size_t>(n));
    int total = 0;
    for (int w = 0; w < n; ++w)
        if (da[w] != DistMatrix::kUnreachable && db[w] != DistMatrix::kUnreachable &&
            da[w] + db[w] == len) {
            ++sc.count[static_cast<std::size_t>(da[w])];
            ++total;
        }
    sc.start.assign(static_cast<std::size_t>(len) + 2, 0);
    for (int l = 0; l <= len; ++l)
        sc.start[static_cast<std::size_t>(l) + 1] = sc.start[static_cast<std::size_t>(l)] + sc.count[static_cast<std::size_t>(l)];
    std::vector<int> cursor = sc.start;
    for (int w = 0; w < n; ++w)
        if (da[w] != DistMatrix::kUnreachable && db[w] != DistMatrix::kUnreachable &&
            da[w] + db[w] == len)
            sc.order[static_cast<std::size_t>(cursor[static_cast<std::size_t>(da[w])]++)] = w;
    sc.dp.assign(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < total; ++t) {
        int w = sc.order[static_cast<std::size_t>(t)];
        int best = 0;
        for (int y : g.neighbors(w))
            if (da[y] != DistMatrix::kUnreachable && db[y] != DistMatrix::kUnreachable &&
                da[y] == da[w] - 1 && da[y] + db[y] == len && sc.dp[static_cast<std::size_t>(y)] > best)
                best = sc.dp[static_cast<std::size_t>(y)];
        int val = best + static_cast<int>((mask >> w) & 1u);
        if (val >= k) return k;  // any dag vertex extends to a full geodesic
        sc.dp[static_cast<std::size_t>(w)] = val;
    }
    return sc.dp[static_cast<std::size_t>(b)];
}

}  // namespace detail

/// Exhaustive maximizer: walks the subset tree in ascending vertex order,
/// include before exclude, never extending an infeasible set (supersets of
/// infeasible sets are infeasible) and cutting branches that cannot beat the
/// incumbent cardinality.
inline SolveResult solve_bruteforce(const Graph& g, const PositionParams& p, int cutoff = 20) {
    if (g.n() > cutoff) throw std::invalid_argument("brute-force cutoff exceeded");
    detail::require_solver_size(g);
    const DistMatrix dm(g);
    const int n = g.n();
    const int k = p.k;
    const int d_eff = effective_d(dm, p);

    detail::PairScratch sc;
    std::vector<int> members;
    members.reserve(static_cast<std::size_t>(n));

    std::uint64_t nodes = 0;
    int best = 0;
    std::uint64_t best_mask = 0;

    auto can_add = [&](int v, std::uint64_t mask, int size) -> bool {
        if (size + 1 < k) return true;
        if (d_eff < k - 1) return true;
        const std::uint64_t m2 = mask | (1ull << v);
        const std::size_t cnt = members.size();
        for (std::size_t i = 0; i <= cnt; ++i) {
            int a = i < cnt ? members[i] : v;
            int dav = dm(a, v);
            if (dav == DistMatrix::kUnreachable) continue;
            for (std::size_t j = i + 1; j <= cnt; ++j) {
                int b = j < cnt ? members[j] : v;
                int len = dm(a, b);
                if (len == DistMatrix::kUnreachable || len < k - 1 || len > d_eff) continue;
                int dvb = dm(v, b);
                if (dvb == DistMatrix::kUnreachable || dav + dvb != len) continue;
                if (detail::max_marked_flat(g, dm, a, b, m2, k, sc) >= k) return false;
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self, int idx, std::uint64_t mask, int size) -> void {
        ++nodes;
        if (size + (n - idx) <= best) return;
        if (idx == n) return;
        if (can_add(idx, mask, size)) {
            std::uint64_t m2 = mask | (1ull << idx);
            members.push_back(idx);
            if (size + 1 > best) {
                best = size + 1;
                best_mask = m2;
            }
            self(self, idx + 1, m2, size + 1);
            members.pop_back();
        }
        self(self, idx + 1, mask, size);
    };
    dfs(dfs, 0, 0, 0);

    SolveResult res;
    res.value = best;
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1u) res.witness.push_back(v);
    res.method = SolveMethod::brute;
    res.nodes_explored = nodes;
    res.effective_d = d_eff;
    return res;
}

struct SearchOptions {
    int workers = 1;
    std::uint64_t node_budget = 0;       // 0 = unlimited; checked in batches of 256 per worker
    double time_budget_seconds = 0.0;    // 0 = unlimited
    bool warm_start = true;              // seed incumbent from a matching family construction
    bool debug_full_check = false;       // re-verify every extension with the full predicate
};

namespace detail {

// Geodesic DAGs for every vertex pair with distance in [k-1, d], flattened
// into pools, plus the pair lists indexed by dag membership that drive the
// incremental feasibility re-check.
struct PairDagEngine {
    int n = 0;
    int k = 0;

    struct PairRec {
        int a = 0, b = 0;
        std::uint32_t vert_begin = 0;
        std::uint32_t vert_count = 0;
    };
    std::vector<PairRec> pairs;
    std::vector<std::int32_t> verts;         // global ids, layer-major per pair
    std::vector<std::uint32_t> pred_start;   // CSR over verts (global positions)
    std::vector<std::uint16_t> preds;        // indices local to the pair
    std::vector<std::vector<std::int32_t>> pairs_with_vertex;
    std::size_t max_dag = 0;

    PairDagEngine(const Graph& g, const DistMatrix& dm, int k_, int d_eff) : n(g.n()), k(k_) {
        pairs_with_vertex.resize(static_cast<std::size_t>(n));
        std::vector<int> local(static_cast<std::size_t>(n), -1);
        std::vector<int> bucket_start;
        pred_start.push_back(0);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                int len = dm(a, b);
                if (len == DistMatrix::kUnreachable || len < k - 1 || len > d_eff) continue;
                const int* da = dm.row(a);
                const int* db = dm.row(b);
                PairRec pr;
                pr.a = a;
                pr.b = b;
                pr.vert_begin = static_cast<std::uint32_t>(verts.size());
                bucket_start.assign(static_cast<std::size_t>(len) + 2, 0);
                for (int w = 0; w < n; ++w)
                    if (da[w] != DistMatrix::kUnreachable && db[w] != DistMatrix::kUnreachable &&
                        da[w] + db[w] == len)
                        ++bucket_start[static_cast<std::size_t>(da[w]) + 1];
                for (int l = 0; l <= len; ++l)
                    bucket_start[static_cast<std::size_t>(l) + 1] += bucket_start[static_cast<std::size_t>(l)];
                pr.vert_count = static_cast<std::uint32_t>(bucket_start[static_cast<std::size_t>(len) + 1]);
                verts.resize(verts.size() + pr.vert_count);
                for (int w = 0; w < n; ++w)
                    if (da[w] != DistMatrix::kUnreachable && db[w] != DistMatrix::kUnreachable &&
                        da[w] + db[w] == len) {
                        int pos = bucket_start[static_cast<std::size_t>(da[w])]++;
                        verts[pr.vert_begin + static_cast<std::size_t>(pos)] = w;
                        local[static_cast<std::size_t>(w)] = pos;
                    }
                for (std::uint32_t t = 0; t < pr.vert_count; ++t) {
                    int w = verts[pr.vert_begin + t];
                    for (int y : g.neighbors(w))
                        if (da[y] != DistMatrix::kUnreachable && db[y] != DistMatrix::kUnreachable &&
                            da[y] + db[y] == len && da[y] == da[w] - 1)
                            preds.push_back(static_cast<std::uint16_t>(local[static_cast<std::size_t>(y)]));
                    pred_start.push_back(static_cast<std::uint32_t>(preds.size()));
                }
                for (std::uint32_t t = 0; t < pr.vert_count; ++t) {
                    int w = verts[pr.vert_begin + t];
                    local[static_cast<std::size_t>(w)] = -1;
                    pairs_with_vertex[static_cast<std::size_t>(w)].push_back(
                        static_cast<std::int32_t>(pairs.size()));
                }
                if (pr.vert_count > max_dag) max_dag = pr.vert_count;
                pairs.push_back(pr);
            }
    }

    int max_marked(const PairRec& pr, std::uint64_t mask, std::vector<std::int32_t>& dp) const {
        const std::int32_t* vp = verts.data() + pr.vert_begin;
        for (std::uint32_t i = 0; i < pr.vert_count; ++i) {
            std::int32_t best = 0;
            for (std::uint32_t t = pred_start[pr.vert_begin + i]; t < pred_start[pr.vert_begin + i + 1]; ++t)
                if (dp[preds[t]] > best) best = dp[preds[t]];
            std::int32_t val = best + static_cast<std::int32_t>((mask >> vp[i]) & 1u);
            if (val >= k) return k;
            dp[i] = val;
        }
        return dp[pr.vert_count - 1];
    }

    // Would S + v stay feasible, given feasible S? (mask excludes v)
    bool can_add(int v, std::uint64_t mask, int size, std::vector<std::int32_t>& dp) const {
        if (size + 1 < k) return true;
        const std::uint64_t m2 = mask | (1ull << v);
        for (std::int32_t pi : pairs_with_vertex[static_cast<std::size_t>(v)]) {
            const PairRec& pr = pairs[static_cast<std::size_t>(pi)];
            if (((m2 >> pr.a) & 1u) && ((m2 >> pr.b) & 1u) && max_marked(pr, m2, dp) >= k)
                return false;
        }
        return true;
    }
};

struct BnbShared {
    const PairDagEngine& eng;
    const Graph& g;
    const DistMatrix& dm;
    PositionParams p;
    int n;
    bool debug_full_check;
    std::atomic<int> best{0};
    std::uint64_t best_mask = 0;  // guarded by witness_mu
    std::mutex witness_mu;
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t node_budget;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;
    std::atomic<bool> aborted{false};
};

struct BnbWorker {
    BnbShared& sh;
    std::vector<std::int32_t> dp;
    std::uint64_t local_nodes = 0;

    explicit BnbWorker(BnbShared& sh_) : sh(sh_), dp(sh_.eng.max_dag, 0) {}

    void offer(std::uint64_t mask, int size) {
        if (size <= sh.best.load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> lock(sh.witness_mu);
        if (size > sh.best.load(std::memory_order_relaxed)) {
            sh.best_mask = mask;
            sh.best.store(size, std::memory_order_relaxed);
        }
    }

    bool tick() {
        if ((++local_nodes & 255u) == 0u) {
            std::uint64_t total = sh.nodes.fetch_add(256, std::memory_order_relaxed) + 256;
            if (sh.node_budget != 0 && total > sh.node_budget) sh.aborted.store(true, std::memory_order_relaxed);
            if (sh.has_deadline && std::chrono::steady_clock::now() > sh.deadline)
                sh.aborted.store(true, std::memory_order_relaxed);
        }
        return !sh.aborted.load(std::memory_order_relaxed);
    }

    void flush_nodes() {
        sh.nodes.fetch_add(local_nodes & 255u, std::memory_order_relaxed);
    }

    void dfs(std::uint64_t mask, int size, int idx) {
        if (!tick()) return;
        if (size + (sh.n - idx) <= sh.best.load(std::memory_order_relaxed)) return;
        if (idx == sh.n) return;
        bool ok = sh.eng.can_add(idx, mask, size, dp);
        if (sh.debug_full_check) {
            VertexSet trial;
            for (int v = 0; v < sh.n; ++v)
                if (((mask >> v) & 1u) || v == idx) trial.push_back(v);
            if (ok != is_kgdp(sh.g, sh.dm, trial, sh.p))
                throw std::logic_error("incremental feasibility disagrees with the full predicate");
        }
        if (ok) {
            std::uint64_t m2 = mask | (1ull << idx);
            offer(m2, size + 1);
            dfs(m2, size + 1, idx + 1);
        }
        dfs(mask, size, idx + 1);
    }
};

inline std::optional<VertexSet> warm_start_set(const Graph& g, const DistMatrix& dm,
                                               const PositionParams& p, int d_eff) {
    const std::string& tag = g.family_tag();
    auto colon = tag.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string name = tag.substr(0, colon);
    const int k = p.k;
    try {
        if (d_eff <= k - 2) return all_vertices(g.n());
        if (name == "path") return path_block_set(k, d_eff, g.n());
        if (name == "cycle") {
            int m = (k - 1) * g.n() / (d_eff + 1);
            if (m < 1) return std::nullopt;
            return j_set(g.n(), m, 0);
        }
        if (name == "complete") return k >= 3 ? all_vertices(g.n()) : VertexSet{0};
        auto shape = family_grid_shape(g);
        if (shape && shape->second == 2) {
            int cols = shape->first;
            VertexSet bestv;
            if (d_eff >= 2 * k - 3) bestv = thin_grid_A(k, d_eff, cols);
            if (k >= 3 && d_eff >= k - 2) {
                VertexSet b = thin_grid_B(k, d_eff, cols);
                if (b.size() > bestv.size()) bestv = std::move(b);
            }
            if (!bestv.empty()) return bestv;
            return std::nullopt;
        }
        if (shape && d_eff == dm.diameter() && std::min(shape->first, shape->second) >= 2 * k - 3)
            return diamond_set(k - 2, {k - 2, k - 2}, shape->first, shape->second);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace detail

/// Branch-and-bound maximizer. Explores vertices in ascending index, include
/// before exclude, pruning on the remaining-vertex bound and on incremental
/// predicate feasibility, optionally warm-started from a matching family
/// construction. The value is deterministic for any worker count; without
/// warm start the single-worker witness is the lexicographically least
/// optimum (a warm-started witness may be the seeding construction itself).
inline SolveResult solve_exact(const Graph& g, const PositionParams& p,
                               const SearchOptions& opts = {}) {
    detail::require_solver_size(g);
    const DistMatrix dm(g);
    const int n = g.n();
    const int d_eff = effective_d(dm, p);
    detail::PairDagEngine eng(g, dm, p.k, d_eff);

    detail::BnbShared sh{eng, g, dm, p, n, opts.debug_full_check};
    sh.node_budget = opts.node_budget;
    if (opts.time_budget_seconds > 0) {
        sh.has_deadline = true;
        sh.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(opts.time_budget_seconds));
    }

    if (opts.warm_start) {
        auto seed = detail::warm_start_set(g, dm, p, d_eff);
        if (seed && is_kgdp(g, dm, *seed, p)) {
            std::uint64_t mask = 0;
            for (int v : *seed) mask |= 1ull << v;
            sh.best_mask = mask;
            sh.best.store(static_cast<int>(seed->size()), std::memory_order_relaxed);
        }
    }

    const int workers = std::max(1, opts.workers);
    if (workers == 1) {
        detail::BnbWorker w(sh);
        w.dfs(0, 0, 0);
        w.flush_nodes();
    } else {
        // carve the tree at a fixed depth into prefix tasks, then share them
        struct Task {
            std::uint64_t mask;
            int size;
        };
        std::vector<Task> tasks;
        const int depth = std::min(n, 14);
        detail::BnbWorker splitter(sh);
        auto expand = [&](auto&& self, std::uint64_t mask, int size, int idx) -> void {
            if (!splitter.tick()) return;
            if (size + (n - idx) <= sh.best.load(std::memory_order_relaxed)) return;
            if (idx == depth || idx == n) {
                tasks.push_back(Task{mask, size});
                return;
            }
            if (eng.can_add(idx, mask, size, splitter.dp)) {
                std::uint64_t m2 = mask | (1ull << idx);
                splitter.offer(m2, size + 1);
                self(self, m2, size + 1, idx + 1);
            }
            self(self, mask, size, idx + 1);
        };
        expand(expand, 0, 0, 0);
        splitter.flush_nodes();

        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                detail::BnbWorker w(sh);
                for (;;) {
                    std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= tasks.size() || sh.aborted.load(std::memory_order_relaxed)) break;
                    w.dfs(tasks[i].mask, tasks[i].size, depth);
                }
                w.flush_nodes();
            });
        for (auto& th : pool) th.join();
    }

    if (sh.aborted.load(std::memory_order_relaxed))
        throw BudgetExhausted(sh.nodes.load(std::memory_order_relaxed));

    SolveResult res;
    res.value = sh.best.load(std::memory_order_relaxed);
    for (int v = 0; v < n; ++v)
        if ((sh.best_mask >> v) & 1u) res.witness.push_back(v);
    res.method = SolveMethod::branch_and_bound;
    res.nodes_explored = sh.nodes.load(std::memory_order_relaxed);
    res.effective_d = d_eff;
    return res;
}

/// Brute force for small graphs, branch-and-bound otherwise.
inline SolveResult solve_auto(const Graph& g, const PositionParams& p) {
    return g.n() <= 16 ? solve_bruteforce(g, p, 16) : solve_exact(g, p);
}

/// Sum of exact per-part optima over an isometric cover: an upper bound,
/// since a witness restricted to an isometric part stays feasible there.
inline int upper_bound_isometric_cover(const Graph& g, const DistMatrix& dm,
                                       const std::vector<VertexSet>& cover,
                                       const PositionParams& p,
                                       const std::vector<int>& part_values) {
    (void)p;
    if (cover.size() != part_values.size())
        throw std::invalid_argument("need exactly one value per cover part");
    std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
    for (const auto& part : cover) {
        if (!is_isometric_subgraph(g, dm, part))
            throw std::invalid_argument("cover part is not isometric");
        for (int v : part) covered[static_cast<std::size_t>(v)] = 1;
    }
    for (char c : covered)
        if (!c) throw std::invalid_argument("cover misses a vertex");
    int sum = 0;
    for (int v : part_values) sum += v;
    return sum;
}

/// Sum of per-part optima over pairwise-distant isometric parts: a lower
/// bound, as no short geodesic can pick up k marked vertices across parts.
/// For k = 2 the parts must be strictly farther than d apart (two marked
/// vertices at distance exactly d already violate the predicate).
inline int lower_bound_disjoint_parts(const Graph& g, const DistMatrix& dm,
                                      const std::vector<VertexSet>& parts,
                                      const PositionParams& p,
                                      const std::vector<int>& part_values) {
    if (parts.size() != part_values.size())
        throw std::invalid_argument("need exactly one value per part");
    std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
    for (const auto& part : parts) {
        if (!is_isometric_subgraph(g, dm, part))
            throw std::invalid_argument("part is not isometric");
        for (int v : part) {
            if (used[static_cast<std::size_t>(v)]) throw std::invalid_argument("parts overlap");
            used[static_cast<std::size_t>(v)] = 1;
        }
    }
    const int min_gap = p.k == 2 ? p.d + 1 : p.d;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int a : parts[i])
                for (int b : parts[j]) {
                    int dist = dm(a, b);
                    if (dist != DistMatrix::kUnreachable && dist < min_gap)
                        throw std::invalid_argument("parts are too close together");
                }
    int sum = 0;
    for (int v : part_values) sum += v;
    return sum;
}

struct LatticeTable {
    int k_max = 0;                          // columns k = 2..k_max
    int d_max = 0;                          // rows d = 1..d_max (the diameter)
    std::vector<std::vector<int>> values;   // values[d-1][k-2]
};

/// Full (d, k) table of optima. Validates the lattice monotonicity that any
/// correct solver must satisfy: nondecreasing in k, nonincreasing in d.
inline LatticeTable lattice_table(
    const Graph& g, int k_max,
    const std::function<int(const Graph&, const PositionParams&)>& value_fn =
        [](const Graph& gg, const PositionParams& pp) { return solve_auto(gg, pp).value; }) {
    if (k_max < 2) throw std::invalid_argument("lattice table needs k_max >= 2");
    LatticeTable t;
    t.k_max = k_max;
    t.d_max = diameter(g);
    for (int d = 1; d <= t.d_max; ++d) {
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(k_max) - 1);
        for (int k = 2; k <= k_max; ++k) row.push_back(value_fn(g, PositionParams(k, d)));
        t.values.push_back(std::move(row));
    }
    for (int di = 0; di < t.d_max; ++di)
        for (int ki = 0; ki + 2 <= t.k_max; ++ki) {
            if (ki + 3 <= t.k_max &&
                t.values[static_cast<std::size_t>(di)][static_cast<std::size_t>(ki)] >
                    t.values[static_cast<std::size_t>(di)][static_cast<std::size_t>(ki) + 1])
                throw std::logic_error("lattice monotonicity violated in k (solver bug)");
            if (di + 1 < t.d_max &&
                t.values[static_cast<std::size_t>(di)][static_cast<std::size_t>(ki)] <
                    t.values[static_cast<std::size_t>(di) + 1][static_cast<std::size_t>(ki)])
                throw std::logic_error("lattice monotonicity violated in d (solver bug)");
        }
    return t;
}

}  // namespace gpkd
