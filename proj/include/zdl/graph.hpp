#pragma once

// Immutable simple undirected graphs on dense bitset rows, plus the exact small-
// instance subroutines (clique, independence, chromatic, path cover) used by the
// bound ledger and the path-cover oracle.

#include <zdl/error.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zdl {

/// Square bit matrix with 64-bit words per row.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }

    bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    void reset(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64)); }

    std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }
    std::span<std::uint64_t> row(std::size_t i) { return {bits_.data() + i * words_, words_}; }

    std::size_t row_count(std::size_t i) const {
        std::size_t c = 0;
        for (auto w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Calls fn(j) for every set bit of row i in ascending order.
    template <class Fn>
    void for_each_in_row(std::size_t i, Fn&& fn) const {
        auto r = row(i);
        for (std::size_t w = 0; w < r.size(); ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = std::countr_zero(bits);
                fn(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

using Edge = std::pair<int, int>;

/// Optional per-vertex annotations: printable label and partite class id.
struct VertexInfo {
    std::string label;
    std::optional<int> part;

    bool operator==(const VertexInfo&) const = default;
};

class Graph {
public:
    Graph() = default;

    /// Builds from an edge list; rejects self-loops and out-of-range endpoints.
    /// Duplicate edges collapse.
    Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n), info_(n) {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
                throw InvalidArgument("edge endpoint out of range");
            if (u == v) throw InvalidArgument("self-loop on vertex " + std::to_string(u));
            adj_.set(u, v);
            adj_.set(v, u);
        }
        for (std::size_t i = 0; i < n; ++i) info_[i].label = std::to_string(i);
    }

    /// Takes ownership of an already symmetric, irreflexive matrix.
    static Graph from_matrix(BitMatrix adj) {
        for (std::size_t i = 0; i < adj.size(); ++i)
            if (adj.test(i, i)) throw InvalidArgument("self-loop on vertex " + std::to_string(i));
        Graph g;
        g.info_.resize(adj.size());
        for (std::size_t i = 0; i < adj.size(); ++i) g.info_[i].label = std::to_string(i);
        g.adj_ = std::move(adj);
        return g;
    }

    std::size_t size() const noexcept { return adj_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_.test(u, v); }
    const BitMatrix& matrix() const noexcept { return adj_; }
    std::size_t degree(std::size_t u) const { return adj_.row_count(u); }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (std::size_t v = 0; v < size(); ++v) d = std::max(d, degree(v));
        return d;
    }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (std::size_t v = 0; v < size(); ++v) c += degree(v);
        return c / 2;
    }

    /// Edges once each, u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t u = 0; u < size(); ++u)
            adj_.for_each_in_row(u, [&](std::size_t v) {
                if (u < v) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
            });
        return out;
    }

    std::vector<int> neighbors(std::size_t u) const {
        std::vector<int> out;
        adj_.for_each_in_row(u, [&](std::size_t v) { out.push_back(static_cast<int>(v)); });
        return out;
    }

    const VertexInfo& info(std::size_t v) const { return info_.at(v); }
    const std::vector<VertexInfo>& annotations() const noexcept { return info_; }
    const std::optional<std::string>& ring() const noexcept { return ring_; }

    Graph with_annotations(std::vector<VertexInfo> info, std::optional<std::string> ring = std::nullopt) const {
        if (info.size() != size()) throw InvalidArgument("annotation count does not match vertex count");
        Graph g = *this;
        g.info_ = std::move(info);
        g.ring_ = std::move(ring);
        return g;
    }

    Graph with_parts(const std::vector<int>& part_of) const {
        if (part_of.size() != size()) throw InvalidArgument("part list length does not match vertex count");
        Graph g = *this;
        for (std::size_t v = 0; v < size(); ++v) g.info_[v].part = part_of[v];
        return g;
    }

    /// Same vertex count, edge set and annotations.
    bool operator==(const Graph&) const = default;

private:
    BitMatrix adj_;
    std::vector<VertexInfo> info_;
    std::optional<std::string> ring_;
};

// ---------------------------------------------------------------------------
// standard graphs

namespace graphs {

inline Graph empty(std::size_t n) { return Graph(n, {}); }

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    auto e = path(n).edges();
    e.emplace_back(0, static_cast<int>(n - 1));
    return Graph(n, e);
}

/// Complete multipartite graph; part ids annotate the vertices.
inline Graph complete_multipartite(const std::vector<int>& sizes) {
    std::vector<int> part_of;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw InvalidArgument("multipartite class sizes must be >= 1");
        part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
    }
    std::vector<Edge> e;
    for (std::size_t u = 0; u < part_of.size(); ++u)
        for (std::size_t v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v]) e.emplace_back(u, v);
    return Graph(part_of.size(), e).with_parts(part_of);
}

/// K_{1,leaves} with the center at vertex 0.
inline Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (std::size_t v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

/// G(n, p) random graph.
inline Graph random(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) e.emplace_back(u, v);
    return Graph(n, e);
}

}  // namespace graphs

// ---------------------------------------------------------------------------
// structural operations

inline Graph complement(const Graph& g) {
    const std::size_t n = g.size();
    BitMatrix m(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && !g.adjacent(u, v)) m.set(u, v);
    return Graph::from_matrix(std::move(m)).with_annotations(g.annotations(), g.ring());
}

/// perm[v] is the new id of vertex v.
inline Graph permute(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm.at(u), perm.at(v));
    std::vector<VertexInfo> info(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) info[perm[v]] = g.info(v);
    return Graph(g.size(), e).with_annotations(std::move(info), g.ring());
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> pos(g.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos.at(keep[i]) = static_cast<int>(i);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) e.emplace_back(pos[u], pos[v]);
    std::vector<VertexInfo> info;
    for (int v : keep) info.push_back(g.info(v));
    return Graph(keep.size(), e).with_annotations(std::move(info), g.ring());
}

// ---------------------------------------------------------------------------
// distances

inline constexpr int unreachable = -1;

inline std::vector<int> bfs(const Graph& g, std::size_t src) {
    std::vector<int> dist(g.size(), unreachable);
    std::deque<std::size_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        g.matrix().for_each_in_row(u, [&](std::size_t v) {
            if (dist[v] == unreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        });
    }
    return dist;
}

/// All-pairs BFS distances; `unreachable` (-1) for disconnected pairs.
inline std::vector<std::vector<int>> distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) d.push_back(bfs(g, v));
    return d;
}

/// Diameter, or nullopt when the graph is disconnected (infinite diameter).
inline std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
        for (int d : bfs(g, v)) {
            if (d == unreachable) return std::nullopt;
            best = std::max(best, d);
        }
    return best;
}

inline bool is_connected(const Graph& g) { return diameter(g).has_value(); }

// ---------------------------------------------------------------------------
// exact small-instance routines (64-bit vertex masks)

inline constexpr std::size_t default_clique_cap = 40;
inline constexpr std::size_t default_chromatic_cap = 24;
inline constexpr std::size_t default_path_cover_cap = 16;

namespace detail {

inline std::vector<std::uint64_t> masks(const Graph& g) {
    std::vector<std::uint64_t> m(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) m[v] = g.matrix().row(v).empty() ? 0 : g.matrix().row(v)[0];
    return m;
}

inline void require_cap(const char* routine, std::size_t n, std::size_t cap) {
    if (n > cap || n > 64) throw CapExceeded(routine, static_cast<long long>(n), static_cast<long long>(std::min<std::size_t>(cap, 64)));
}

// Tomita-style max clique with greedy colouring bound.
inline void expand_clique(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int size, int& best) {
    while (cand) {
        // colour bound: number of greedy colour classes in cand
        int colours = 0;
        for (std::uint64_t rest = cand; rest; ++colours) {
            std::uint64_t cls = rest;
            std::uint64_t pick = 0;
            while (cls) {
                int v = std::countr_zero(cls);
                pick |= std::uint64_t{1} << v;
                cls &= ~adj[v] & ~(std::uint64_t{1} << v);
            }
            rest &= ~pick;
        }
        if (size + colours <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t next = cand & adj[v];
        if (next == 0) {
            best = std::max(best, size + 1);
        } else {
            expand_clique(adj, next, size + 1, best);
        }
    }
}

inline bool colour_dfs(const std::vector<std::uint64_t>& adj, std::vector<int>& colour, int k, std::size_t coloured) {
    const std::size_t n = adj.size();
    if (coloured == n) return true;
    // DSATUR choice
    int pick = -1, best_sat = -1, best_deg = -1;
    for (std::size_t v = 0; v < n; ++v) {
        if (colour[v] >= 0) continue;
        std::uint64_t seen = 0;
        for (std::uint64_t nb = adj[v]; nb; nb &= nb - 1) {
            int u = std::countr_zero(nb);
            if (colour[u] >= 0) seen |= std::uint64_t{1} << colour[u];
        }
        int sat = std::popcount(seen);
        int deg = std::popcount(adj[v]);
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            pick = static_cast<int>(v);
            best_sat = sat;
            best_deg = deg;
        }
    }
    int used = *std::max_element(colour.begin(), colour.end()) + 1;
    for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (std::uint64_t nb = adj[pick]; nb; nb &= nb - 1)
            if (colour[std::countr_zero(nb)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colour[pick] = c;
        if (colour_dfs(adj, colour, k, coloured + 1)) return true;
        colour[pick] = -1;
    }
    return false;
}

}  // namespace detail

inline int clique_number(const Graph& g, std::size_t cap = default_clique_cap) {
    detail::require_cap("clique_number", g.size(), cap);
    if (g.size() == 0) return 0;
    auto adj = detail::masks(g);
    int best = 1;
    std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
    detail::expand_clique(adj, all, 0, best);
    return best;
}

inline int independence_number(const Graph& g, std::size_t cap = default_clique_cap) {
    detail::require_cap("independence_number", g.size(), cap);
    return clique_number(complement(g), cap);
}

inline int chromatic_number(const Graph& g, std::size_t cap = default_chromatic_cap) {
    detail::require_cap("chromatic_number", g.size(), cap);
    if (g.size() == 0) return 0;
    auto adj = detail::masks(g);
    for (int k = clique_number(g, 64); k <= static_cast<int>(g.size()); ++k) {
        std::vector<int> colour(g.size(), -1);
        if (detail::colour_dfs(adj, colour, k, 0)) return k;
    }
    return static_cast<int>(g.size());
}

/// Minimum number of vertex-disjoint paths covering every vertex.
/// Hamiltonian-path subset DP followed by a minimum partition DP.
inline int path_cover_number(const Graph& g, std::size_t cap = default_path_cover_cap) {
    detail::require_cap("path_cover_number", g.size(), cap);
    const std::size_t n = g.size();
    if (n == 0) return 0;
    const std::size_t full = std::size_t{1} << n;
    auto adj = detail::masks(g);

    // ends[S]: bitmask of vertices v such that some path covering exactly S ends at v
    std::vector<std::uint32_t> ends(full, 0);
    for (std::size_t v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1U << v;
    for (std::size_t s = 1; s < full; ++s) {
        std::uint32_t e = ends[s];
        for (std::uint32_t rest = e; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            std::uint64_t ext = adj[v] & ~static_cast<std::uint64_t>(s);
            for (; ext; ext &= ext - 1) {
                int w = std::countr_zero(ext);
                ends[s | (std::size_t{1} << w)] |= 1U << w;
            }
        }
    }
    std::vector<std::uint8_t> best(full, 0xFF);
    best[0] = 0;
    for (std::size_t s = 1; s < full; ++s) {
        std::size_t low = s & (~s + 1);
        std::size_t rest = s & ~low;
        // submasks of s that contain the lowest vertex
        for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
            std::size_t piece = sub | low;
            if (ends[piece] && best[s & ~piece] != 0xFF)
                best[s] = std::min<std::uint8_t>(best[s], static_cast<std::uint8_t>(best[s & ~piece] + 1));
            if (sub == 0) break;
        }
    }
    return best[full - 1];
}

/// True iff map is a bijection V(g1) -> V(g2) with u~v in g1 <=> map(u)~map(v) in g2.
inline bool adjacency_preserved_under(const std::vector<int>& map, const Graph& g1, const Graph& g2) {
    if (map.size() != g1.size() || g1.size() != g2.size()) throw InvalidArgument("vertex map is not a bijection: size mismatch");
    std::vector<char> hit(g2.size(), 0);
    for (int t : map) {
        if (t < 0 || static_cast<std::size_t>(t) >= g2.size() || hit[t]) throw InvalidArgument("vertex map is not a bijection");
        hit[t] = 1;
    }
    for (std::size_t u = 0; u < g1.size(); ++u)
        for (std::size_t v = u + 1; v < g1.size(); ++v)
            if (g1.adjacent(u, v) != g2.adjacent(map[u], map[v])) return false;
    return true;
}

}  // namespace zdl
