#pragma once

// Brute-force reference routines for cross-checking the library. Deliberately
// naive: no pruning beyond the constraint checks themselves.

#include <zdl/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline std::vector<std::vector<int>> floyd(const zdl::Graph& g) {
    const int n = static_cast<int>(g.size());
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) d[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline bool valid_l21(const zdl::Graph& g, const std::vector<int>& f) {
    auto d = floyd(g);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (d[i][j] == 1 && std::abs(f[i] - f[j]) < 2) return false;
            if (d[i][j] == 2 && f[i] == f[j]) return false;
        }
    return true;
}

/// Is there an L(2,1)-labelling with labels in [0, K]? Plain index-order backtracking.
inline bool l21_feasible(const zdl::Graph& g, int K) {
    const int n = static_cast<int>(g.size());
    auto d = floyd(g);
    std::vector<int> f(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int l = 0; l <= K; ++l) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (d[u][v] == 1 && std::abs(f[u] - l) < 2) ok = false;
                if (d[u][v] == 2 && f[u] == l) ok = false;
            }
            if (!ok) continue;
            f[v] = l;
            if (self(self, v + 1)) return true;
        }
        f[v] = -1;
        return false;
    };
    return rec(rec, 0);
}

inline int lambda(const zdl::Graph& g) {
    if (g.size() == 0) return 0;
    int K = 0;
    while (!l21_feasible(g, K)) ++K;
    return K;
}

inline bool is_clique(const zdl::Graph& g, std::uint32_t mask) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if ((mask >> i & 1U) && (mask >> j & 1U) && !g.adjacent(i, j)) return false;
    return true;
}

inline int clique(const zdl::Graph& g) {
    int best = 0;
    for (std::uint32_t m = 0; m < (1U << g.size()); ++m)
        if (is_clique(g, m)) best = std::max(best, std::popcount(m));
    return best;
}

inline int independence(const zdl::Graph& g) { return clique(zdl::complement(g)); }

inline int chromatic(const zdl::Graph& g) {
    const int n = static_cast<int>(g.size());
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        // odometer over all k^n colourings
        while (true) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j)
                    if (g.adjacent(i, j) && c[i] == c[j]) ok = false;
            if (ok) return k;
            int i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

/// Minimum number of paths covering all vertices, by trying every vertex order
/// and cutting it wherever consecutive vertices are not adjacent.
inline int path_cover(const zdl::Graph& g) {
    const int n = static_cast<int>(g.size());
    if (n == 0) return 0;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    int best = n;
    do {
        int paths = 1;
        for (int i = 1; i < n; ++i)
            if (!g.adjacent(p[i - 1], p[i])) ++paths;
        best = std::min(best, paths);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

}  // namespace oracle
