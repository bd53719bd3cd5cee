#include <catch2/catch_amalgamated.hpp>

#include "gpkd/formulas.hpp"

#include "reference_tables.hpp"

using namespace gpkd;

TEST_CASE("path formula spot values") {
    CHECK(gp_path(14, PositionParams(3, 2)) == 10);
    CHECK(gp_path(14, PositionParams(14, 13)) == 13);
    CHECK(gp_path(5, PositionParams(7, 3)) == 5);  // d <= k-2: all vertices
    CHECK(gp_path(1, PositionParams(2, 1)) == 1);
    CHECK(gp_path(3, PositionParams(2, 1)) == 2);
    CHECK_THROWS_AS(gp_path(0, PositionParams(2, 1)), std::invalid_argument);
    // short paths: gp^k_d(P_n) = min(n, k-1) whenever d >= n-1 >= k-1
    for (int n = 2; n <= 10; ++n)
        for (int k = 2; k <= n; ++k)
            CHECK(gp_path(n, PositionParams(k, n - 1)) == std::min(n, k - 1));
}

TEST_CASE("path formula reproduces the published P_14 table") {
    for (int d = 1; d <= 13; ++d)
        for (int k = 2; k <= 15; ++k)
            CHECK(gp_path(14, PositionParams(k, d)) == testutil::kTableP14[d - 1][k - 2]);
}

TEST_CASE("cycle formula values and domain") {
    CHECK(gp_cycle(14, PositionParams(3, 2)) == 9);
    CHECK(gp_cycle(16, PositionParams(3, 5)) == 5);
    CHECK(gp_cycle(14, PositionParams(9, 7)) == 14);  // d <= k-2 holds for any k
    CHECK_THROWS_AS(gp_cycle(16, PositionParams(3, 9)), std::domain_error);
    CHECK_THROWS_AS(gp_cycle(2, PositionParams(2, 1)), std::invalid_argument);

    // corrected two-factor form for k = 3
    for (int n = 5; n <= 20; ++n)
        for (int d = 2; d <= n / 2; ++d)
            CHECK(gp_cycle(n, PositionParams(3, d)) == 2 * n / (d + 1));
}

TEST_CASE("cycle formula reproduces the published C_14 table") {
    for (int d = 1; d <= 7; ++d)
        for (int k = 2; k <= 9; ++k)
            CHECK(gp_cycle(14, PositionParams(k, d)) == testutil::kTableC14[d - 1][k - 2]);
}

TEST_CASE("prism formula spot values and case labels") {
    CHECK(gp_prism(7, PositionParams(2, 3)) == 3);
    CHECK(gp_prism_case(7, PositionParams(2, 3)).case_label == "k2");
    CHECK(gp_prism(12, PositionParams(4, 5)) == 12);
    CHECK(gp_prism_case(12, PositionParams(4, 5)).case_label == "3(a)i");
    CHECK(gp_prism(22, PositionParams(5, 9)) == 18);
    CHECK(gp_prism_case(22, PositionParams(5, 9)).case_label == "3(b)i");
    CHECK(gp_prism(5, PositionParams(4, 2)) == 10);  // d <= k-2
    CHECK(gp_prism(1, PositionParams(3, 2)) == 2);
    CHECK(gp_prism_case(1, PositionParams(3, 2)).case_label == "k3-short-n1");
    CHECK(gp_prism(4, PositionParams(3, 6)) == 3);
    CHECK(gp_prism(2, PositionParams(3, 2)) == 2);
    CHECK(gp_prism_case(2, PositionParams(3, 2)).case_label == "k3-short");
    CHECK(gp_prism(5, PositionParams(3, 2)) == 6);
    CHECK(gp_prism_case(5, PositionParams(3, 2)).case_label == "k3-d2");
    CHECK_THROWS_AS(gp_prism(0, PositionParams(2, 1)), std::invalid_argument);
}

TEST_CASE("prism formula equals the construction maximum on the common domain") {
    CHECK(gp_prism_via_constructions(22, PositionParams(5, 9)) == 18);
    CHECK(gp_prism_via_constructions(4, PositionParams(4, 5)) == 4);
    CHECK(gp_prism_via_constructions(6, PositionParams(4, 5)) == 6);
    CHECK_THROWS_AS(gp_prism_via_constructions(5, PositionParams(3, 4)), std::domain_error);
    CHECK_THROWS_AS(gp_prism_via_constructions(5, PositionParams(5, 3)), std::domain_error);

    for (int n = 1; n <= 30; ++n)
        for (int k = 4; k <= 6; ++k)
            for (int d = k - 1; d <= 10; ++d)
                CHECK(gp_prism(n, PositionParams(k, d)) ==
                      gp_prism_via_constructions(n, PositionParams(k, d)));
}

TEST_CASE("prism values match the path-based identity on its domain") {
    for (int k = 3; k <= 6; ++k)
        for (int d = 2 * k - 3; d <= 10; ++d)
            for (int n = d + 1; n <= 24; ++n) {
                int lhs = gp_prism(n, PositionParams(k, d));
                int rhs = std::max(gp_path(n, PositionParams(2 * k - 2, d - 1)),
                                   2 * gp_path(n, PositionParams(k - 1, d - 1)));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("formulas are monotone in k and antitone in d") {
    for (int n = 1; n <= 16; ++n)
        for (int k = 2; k <= 8; ++k)
            for (int d = 1; d <= 10; ++d) {
                CHECK(gp_path(n, PositionParams(k, d)) <= gp_path(n, PositionParams(k + 1, d)));
                CHECK(gp_path(n, PositionParams(k, d)) >= gp_path(n, PositionParams(k, d + 1)));
                CHECK(gp_prism(n, PositionParams(k, d)) <= gp_prism(n, PositionParams(k + 1, d)));
                CHECK(gp_prism(n, PositionParams(k, d)) >= gp_prism(n, PositionParams(k, d + 1)));
                if (n >= 3 && d + 1 <= n / 2) {
                    CHECK(gp_cycle(n, PositionParams(k, d)) <=
                          gp_cycle(n, PositionParams(k + 1, d)));
                    CHECK(gp_cycle(n, PositionParams(k, d)) >=
                          gp_cycle(n, PositionParams(k, d + 1)));
                }
            }
}
