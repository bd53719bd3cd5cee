#pragma once

#include <stdexcept>
#include <string>

#include "gpkd/families.hpp"
#include "gpkd/position.hpp"

namespace gpkd {

// Whenever d <= k-2, a geodesic of length at most d carries at most d+1 <= k-1
// vertices, so every vertex set qualifies and the optimum is |V|. The closed
// forms below therefore split on d <= k-2 first.

/// Largest k-general d-position set in the path P_n. Total for all n >= 1.
inline int gp_path(int n, const PositionParams& p) {
    if (n < 1) throw std::invalid_argument("gp_path needs n >= 1");
    if (p.d <= p.k - 2) return n;
    int q = n / (p.d + 1);
    int r = n % (p.d + 1);
    return (p.k - 1) * q + std::min(r, p.k - 1);
}

/// Largest k-general d-position set in the cycle C_n. Defined for
/// d <= k-2 (every set qualifies) and for k-1 <= d <= floor(n/2); other
/// parameters are outside the proven range and are rejected, not extrapolated.
inline int gp_cycle(int n, const PositionParams& p) {
    if (n < 3) throw std::invalid_argument("gp_cycle needs n >= 3");
    if (p.d <= p.k - 2) return n;
    if (p.d > n / 2)
        throw std::domain_error("gp_cycle is proven only for d <= floor(n/2); clamp d to the diameter or use a solver");
    return ((p.k - 1) * n) / (p.d + 1);
}

struct PrismValue {
    int value;
    std::string case_label;
};

/// Largest k-general d-position set in P_n x P_2 with the case of the
/// piecewise closed form that produced it. Total for all n >= 1.
inline PrismValue gp_prism_case(int n, const PositionParams& p) {
    if (n < 1) throw std::invalid_argument("gp_prism needs n >= 1");
    const int k = p.k, d = p.d;
    if (d <= k - 2) return {2 * n, "all-vertices"};
    if (k == 2) return {(n + d - 1) / d, "k2"};
    const int q = n / d;
    const int r = n % d;
    if (k == 3) {
        if (n <= d) {
            if (n == 1) return {2, "k3-short-n1"};
            return {std::min(n, 3), "k3-short"};
        }
        if (d == 2) return {2 * (n / 2) + 2 * std::min(n % 2, 1), "k3-d2"};
        return {3 * q + std::min(r, 3), "k3-wide"};
    }
    // k >= 4, d >= k-1
    if (n <= d) {
        if (n <= 2 * k - 4) return {2 * std::min(n, k - 2), "1-short"};
        return {2 * k - 3, "1-long"};
    }
    if (d < 2 * k - 3) return {(2 * k - 4) * q + 2 * std::min(r, k - 2), "2"};
    if (r <= k - 2) {
        if (r <= q) return {(2 * k - 3) * q + r, "3(a)i"};
        return {(2 * k - 4) * q + 2 * r, "3(a)ii"};
    }
    if (r < 2 * k - 3) {
        if (2 * k - 4 - r <= q) return {(2 * k - 3) * q + r, "3(b)i"};
        return {(2 * k - 4) * (q + 1), "3(b)ii"};
    }
    return {(2 * k - 3) * (q + 1), "3(c)"};
}

inline int gp_prism(int n, const PositionParams& p) { return gp_prism_case(n, p).value; }

/// The same optimum obtained as the larger of the two extremal construction
/// cardinalities (zigzag A and full-column B), for k >= 4 and d >= k-1.
inline int gp_prism_via_constructions(int n, const PositionParams& p) {
    if (n < 1) throw std::invalid_argument("gp_prism_via_constructions needs n >= 1");
    if (p.k < 4) throw std::domain_error("construction comparison is defined for k >= 4");
    if (p.d < p.k - 1) throw std::domain_error("construction comparison needs d >= k - 1");
    const int k = p.k, d = p.d;
    auto size_A = [&] { return static_cast<int>(thin_grid_A(k, d, n).size()); };
    auto size_B = [&] { return static_cast<int>(thin_grid_B(k, d, n).size()); };
    if (n <= d) return n >= 2 * k - 3 ? size_A() : size_B();
    if (d < 2 * k - 3) return size_B();
    return std::max(size_A(), size_B());
}

}  // namespace gpkd
