#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gpkd/families.hpp"
#include "gpkd/formulas.hpp"
#include "gpkd/geodesy.hpp"
#include "gpkd/position.hpp"
#include "gpkd/random.hpp"

using namespace gpkd;

TEST_CASE("j_set values and range checks") {
    CHECK(j_set(16, 5, 0) == VertexSet{0, 3, 6, 9, 12});
    CHECK(j_set(8, 4, 0) == VertexSet{0, 2, 4, 6});
    CHECK(j_set(5, 5, 0) == all_vertices(5));
    CHECK(j_set(8, 3, 4) == VertexSet{1, 4, 6});
    CHECK_THROWS_AS(j_set(5, 6, 0), std::invalid_argument);
    CHECK_THROWS_AS(j_set(5, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(j_set(5, 3, 5), std::invalid_argument);
}

TEST_CASE("j_set is maximally even and in position on cycles") {
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m <= n; ++m)
            for (int r = 0; r < n; ++r) CHECK(is_maximally_even(n, j_set(n, m, r)));

    for (int n = 4; n <= 14; ++n) {
        Graph c = build_family("cycle:" + std::to_string(n));
        DistMatrix dm(c);
        for (int k = 2; k <= 5; ++k)
            for (int d = std::max(1, k - 1); d <= n / 2; ++d) {
                int m = (k - 1) * n / (d + 1);
                if (m < 1) continue;
                CHECK(is_kgdp(c, dm, j_set(n, m, 0), PositionParams(k, d)));
            }
    }
}

TEST_CASE("path blocks match the closed form and pass the predicate") {
    CHECK(path_block_set(3, 3, 14) == VertexSet{0, 1, 4, 5, 8, 9, 12, 13});
    CHECK(path_block_set(2, 1, 3) == VertexSet{0, 2});
    CHECK_THROWS_AS(path_block_set(3, 1, 5), std::invalid_argument);

    for (int n = 1; n <= 20; ++n) {
        Graph p = build_family("path:" + std::to_string(n));
        DistMatrix dm(p);
        for (int k = 2; k <= 5; ++k)
            for (int d = k - 1; d <= 6; ++d) {
                VertexSet s = path_block_set(k, d, n);
                CHECK(static_cast<int>(s.size()) == gp_path(n, PositionParams(k, d)));
                CHECK(is_kgdp(p, dm, s, PositionParams(k, d)));
            }
    }
}

TEST_CASE("thin-grid constructions stay in position on the prism") {
    CHECK(thin_grid_A(3, 3, 7) == VertexSet{0, 3, 4, 7, 8, 11, 12});
    CHECK(thin_grid_B(4, 4, 9) == VertexSet{0, 1, 2, 3, 8, 9, 10, 11, 16, 17});
    CHECK(thin_grid_B(2, 3, 9).empty());
    CHECK_THROWS_AS(thin_grid_A(4, 4, 9), std::invalid_argument);  // d < 2k-3
    CHECK_THROWS_AS(thin_grid_B(5, 2, 9), std::invalid_argument);  // d < k-2

    for (int n = 1; n <= 12; ++n) {
        Graph pr = build_family("prism:" + std::to_string(n));
        DistMatrix dm(pr);
        for (int k = 2; k <= 5; ++k)
            for (int d = 1; d <= 8; ++d) {
                if (d >= 2 * k - 3)
                    CHECK(is_kgdp(pr, dm, thin_grid_A(k, d, n), PositionParams(k, d)));
                if (k >= 3 && d >= k - 2)
                    CHECK(is_kgdp(pr, dm, thin_grid_B(k, d, n), PositionParams(k, d)));
            }
    }
}

TEST_CASE("diamond sets") {
    CHECK(diamond_set(0, {1, 1}, 3, 3) == VertexSet{4});
    CHECK(diamond_set(1, {1, 1}, 3, 3) == VertexSet{1, 3, 5, 7});
    VertexSet d2 = diamond_set(2, {2, 2}, 5, 5);
    CHECK(d2 == VertexSet{2, 6, 8, 10, 12, 14, 16, 18, 22});
    CHECK_THROWS_AS(diamond_set(2, {0, 0}, 3, 3), std::invalid_argument);

    for (int r = 0; r <= 3; ++r)
        CHECK(static_cast<int>(diamond_set(r, {r, r}, 2 * r + 1, 2 * r + 1).size()) ==
              (r + 1) * (r + 1));

    // diamond of radius k-2 inside P_{2k-3} x P_{2k-3} at d = diameter
    for (int k = 2; k <= 5; ++k) {
        int side = 2 * k - 3;
        Graph g = build_family("grid:" + std::to_string(side) + "x" + std::to_string(side));
        DistMatrix dm(g);
        VertexSet s = diamond_set(k - 2, {k - 2, k - 2}, side, side);
        CHECK(static_cast<int>(s.size()) == (k - 1) * (k - 1));
        CHECK(is_kgdp(g, dm, s, PositionParams(k, std::max(1, dm.diameter()))));
    }
}

TEST_CASE("longest monotone subsequence") {
    auto as_points = [](std::vector<int> ys) {
        std::vector<std::pair<int, int>> pts;
        for (std::size_t i = 0; i < ys.size(); ++i) pts.emplace_back(static_cast<int>(i), ys[i]);
        return pts;
    };
    auto is_subsequence = [](const std::vector<std::pair<int, int>>& sub,
                             const std::vector<std::pair<int, int>>& full) {
        std::size_t i = 0;
        for (const auto& p : full)
            if (i < sub.size() && sub[i] == p) ++i;
        return i == sub.size();
    };
    auto is_monotone = [](const std::vector<std::pair<int, int>>& s) {
        bool up = true, down = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (s[i + 1].first < s[i].first) return false;
            up = up && s[i].second <= s[i + 1].second;
            down = down && s[i].second >= s[i + 1].second;
        }
        return up || down;
    };

    CHECK(longest_monotone_subsequence({}).empty());
    CHECK(longest_monotone_subsequence(as_points({3, 1, 4, 1, 5})).size() == 3);
    CHECK(longest_monotone_subsequence(as_points({2, 1, 4, 3})).size() == 2);
    auto inc = as_points({1, 2, 3, 4, 5});
    CHECK(longest_monotone_subsequence(inc) == inc);
    auto dec = as_points({5, 3, 3, 1});
    CHECK(longest_monotone_subsequence(dec) == dec);

    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::pair<int, int>> pts;
        int len = 1 + rand_below(rng, 12);
        for (int i = 0; i < len; ++i)
            pts.emplace_back(trial % 2 == 0 ? i : rand_below(rng, 6), rand_below(rng, 8));
        auto sub = longest_monotone_subsequence(pts);
        CHECK(is_subsequence(sub, pts));
        CHECK(is_monotone(sub));
        CHECK(!sub.empty());
    }

    // any sequence of length (n-1)^2 + 1 has a monotone subsequence of length n
    for (int trial = 0; trial < 50; ++trial) {
        auto pts = as_points({});
        for (int i = 0; i < 10; ++i)
            pts.emplace_back(i, rand_below(rng, 100));
        CHECK(longest_monotone_subsequence(pts).size() >= 4);
    }
}

TEST_CASE("monotone labeling check on grids") {
    for (const char* desc : {"grid:3x3", "grid:2x4", "prism:4", "grid:4x3"}) {
        Graph g = build_family(desc);
        DistMatrix dm(g);
        for (int k = 2; k <= 4; ++k) CHECK(check_k_monotone_geodesic_labeling(g, dm, k));
    }
    Graph c = build_family("cycle:6");
    DistMatrix dmc(c);
    CHECK_THROWS_AS(check_k_monotone_geodesic_labeling(c, dmc, 3), std::invalid_argument);
}

TEST_CASE("monotone labeling check fails when all staircases are blocked") {
    // 3x3 grid with the center removed, original planar coordinates kept
    std::vector<std::pair<int, int>> coords = {{0, 0}, {0, 1}, {0, 2}, {1, 0},
                                               {1, 2}, {2, 0}, {2, 1}, {2, 2}};
    Graph g = build_graph(8, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 5}, {5, 6}, {6, 7}, {4, 7}});
    DistMatrix dm(g);
    CHECK(check_k_monotone_geodesic_labeling(g, dm, coords, 2));
    CHECK(check_k_monotone_geodesic_labeling(g, dm, coords, 3));
    CHECK_FALSE(check_k_monotone_geodesic_labeling(g, dm, coords, 4));

    // cross-check the failing monotone tuple {0,3,4,7} against raw enumeration
    for (const auto& w : enumerate_geodesics(g, dm, 0, 7)) {
        bool has3 = std::find(w.vertices.begin(), w.vertices.end(), 3) != w.vertices.end();
        bool has4 = std::find(w.vertices.begin(), w.vertices.end(), 4) != w.vertices.end();
        CHECK_FALSE((has3 && has4));
    }
}
