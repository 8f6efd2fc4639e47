#ifndef MAGPOW_TESTS_ORACLES_HPP
#define MAGPOW_TESTS_ORACLES_HPP

// Independent reference computations used to check the library. They share
// no code with src/ beyond the IntSquare container.

#include "magpow/int_square.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<long long>>;

inline Grid to_grid(const magpow::IntSquare& a) {
    Grid g(a.order(), std::vector<long long>(a.order()));
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) g[i][j] = a(i, j).get_si();
    return g;
}

inline magpow::IntSquare from_grid(const Grid& g) {
    magpow::IntSquare a(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) a(i, j) = static_cast<long>(g[i][j]);
    return a;
}

inline Grid multiply(const Grid& a, const Grid& b) {
    const std::size_t n = a.size();
    Grid c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Leibniz expansion over all permutations; fine for n <= 6.
inline magpow::Integer leibniz_det(const std::vector<std::vector<magpow::Integer>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    magpow::Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        magpow::Integer term = 1;
        for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
        total += (inversions % 2) ? magpow::Integer(-term) : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// det(xI - A) at an integer point.
inline magpow::Integer char_poly_at(const magpow::IntSquare& a, long x) {
    const std::size_t n = a.order();
    std::vector<std::vector<magpow::Integer>> m(n, std::vector<magpow::Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? magpow::Integer(x) : magpow::Integer(0)) - a(i, j);
    return leibniz_det(m);
}

inline Grid rotate_cw(const Grid& a) {
    const std::size_t n = a.size();
    Grid b(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[j][n - 1 - i] = a[i][j];
    return b;
}

inline Grid transpose(const Grid& a) {
    Grid b = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) b[i][j] = a[j][i];
    return b;
}

// All eight images: four rotations of A and four of its transpose.
inline std::vector<Grid> orbit(const Grid& a) {
    std::vector<Grid> out;
    Grid r = a, t = transpose(a);
    for (int k = 0; k < 4; ++k) {
        out.push_back(r);
        r = rotate_cw(r);
    }
    for (int k = 0; k < 4; ++k) {
        out.push_back(t);
        t = rotate_cw(t);
    }
    return out;
}

// The orbit member with the smallest top-left corner and a01 < a10, chosen
// by scanning all eight images.
inline Grid frenicle_by_search(const Grid& a) {
    for (const auto& g : orbit(a)) {
        const long long c = g[0][0];
        const std::size_t n = g.size();
        const long long others = std::min({g[0][n - 1], g[n - 1][0], g[n - 1][n - 1]});
        if (c < others && g[0][1] < g[1][0]) return g;
    }
    return {};
}

// Random doubly-affine integer square: a weighted sum of permutation
// matrices, so every row and column sums to the total weight.
inline magpow::IntSquare random_da(std::mt19937& rng, std::size_t n, int terms = 5, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> weight(lo, hi);
    Grid g(n, std::vector<long long>(n, 0));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < terms; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const int w = weight(rng);
        for (std::size_t i = 0; i < n; ++i) g[i][perm[i]] += w;
    }
    return from_grid(g);
}

inline long long grid_line(const Grid& g, std::size_t i) {
    return std::accumulate(g[i].begin(), g[i].end(), 0LL);
}

} // namespace oracle

#endif
