#pragma once

// Zero-divisor graphs: Gamma(R) on the nonzero zero divisors, Beck's Gamma'(R) on
// all elements, zero-pattern partite structures, and the isolated+dominating
// augmentation.

#include <zdl/graph.hpp>
#include <zdl/ring.hpp>

#include <map>
#include <string>
#include <vector>

namespace zdl {

/// Partition of the vertex set into independent classes.
struct PartiteStructure {
    std::vector<std::vector<int>> classes;
    std::vector<std::string> keys;  // zero-pattern key when ring-derived, else an opaque id
    bool uniform_patterns = true;   // false once a pattern class had to be split into singletons

    std::size_t size() const noexcept { return classes.size(); }

    /// class index of every vertex; requires a covering partition of n vertices
    std::vector<int> class_of(std::size_t n) const {
        std::vector<int> out(n, -1);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidArgument("partite class names vertex out of range");
                if (out[v] != -1) throw InvalidArgument("partite classes overlap at vertex " + std::to_string(v));
                out[v] = static_cast<int>(c);
            }
        for (std::size_t v = 0; v < n; ++v)
            if (out[v] == -1) throw InvalidArgument("partite classes do not cover vertex " + std::to_string(v));
        return out;
    }

    static PartiteStructure singletons(std::size_t n) {
        PartiteStructure p;
        for (std::size_t v = 0; v < n; ++v) {
            p.classes.push_back({static_cast<int>(v)});
            p.keys.push_back(std::to_string(v));
        }
        return p;
    }

    /// Classes from per-vertex part ids, ordered by first appearance.
    static PartiteStructure from_part_ids(const std::vector<int>& part_of) {
        PartiteStructure p;
        std::map<int, std::size_t> index;
        for (std::size_t v = 0; v < part_of.size(); ++v) {
            auto [it, fresh] = index.emplace(part_of[v], p.classes.size());
            if (fresh) {
                p.classes.emplace_back();
                p.keys.push_back(std::to_string(part_of[v]));
            }
            p.classes[it->second].push_back(static_cast<int>(v));
        }
        return p;
    }
};

/// Throws unless parts is a covering partition of g into independent sets.
inline void check_partition(const Graph& g, const PartiteStructure& parts) {
    parts.class_of(g.size());
    for (std::size_t c = 0; c < parts.size(); ++c) {
        const auto& cls = parts.classes[c];
        if (cls.empty()) throw InvalidArgument("empty partite class " + std::to_string(c));
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (g.adjacent(cls[i], cls[j]))
                    throw InvalidArgument("partite class " + std::to_string(c) + " is not independent");
    }
}

/// Parts read from the graph's vertex annotations; singletons for unannotated vertices.
inline PartiteStructure parts_from_annotations(const Graph& g) {
    std::vector<int> ids(g.size());
    int fresh = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.info(v).part) fresh = std::max(fresh, *g.info(v).part + 1);
    for (std::size_t v = 0; v < g.size(); ++v) ids[v] = g.info(v).part ? *g.info(v).part : fresh++;
    return PartiteStructure::from_part_ids(ids);
}

struct RingGraph {
    Graph graph;
    PartiteStructure parts;
    std::vector<Element> elements;  // ring element of each vertex
};

namespace detail {

inline std::vector<std::vector<int>> zero_pattern_classes(const std::vector<Element>& elems, const RingSpec& spec,
                                                          std::vector<std::string>& keys) {
    std::map<std::string, std::size_t> index;
    std::vector<std::vector<int>> classes;
    for (std::size_t v = 0; v < elems.size(); ++v) {
        auto key = pattern_key(zero_pattern(elems[v], spec));
        auto [it, fresh] = index.emplace(key, classes.size());
        if (fresh) {
            classes.emplace_back();
            keys.push_back(key);
        }
        classes[it->second].push_back(static_cast<int>(v));
    }
    return classes;
}

inline Graph annotate(Graph g, const std::vector<Element>& elems, const std::vector<int>& part_of, const RingSpec& spec) {
    std::vector<VertexInfo> info(elems.size());
    for (std::size_t v = 0; v < elems.size(); ++v) {
        info[v].label = format_element(elems[v]);
        if (!part_of.empty()) info[v].part = part_of[v];
    }
    return g.with_annotations(std::move(info), spec.to_string());
}

}  // namespace detail

/// Gamma(R): nonzero zero divisors in enumeration order, edge iff ab = 0.
///
/// Parts are the zero-pattern classes. A class that is not independent (possible
/// only for non-reduced rings) is split into singletons and the structure is
/// flagged non-uniform.
inline RingGraph gamma(const RingSpec& spec, std::uint64_t cap = default_enumeration_cap) {
    std::vector<Element> zd;
    for (auto& e : enumerate_elements(spec, cap))
        if (classify_element(e, spec) == ElementKind::ZeroDivisor) zd.push_back(std::move(e));

    const std::size_t n = zd.size();
    BitMatrix adj(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (product_is_zero(zd[u], zd[v], spec)) {
                adj.set(u, v);
                adj.set(v, u);
            }
    Graph g = Graph::from_matrix(std::move(adj));

    std::vector<std::string> keys;
    auto pattern_classes = detail::zero_pattern_classes(zd, spec, keys);
    PartiteStructure parts;
    for (std::size_t c = 0; c < pattern_classes.size(); ++c) {
        const auto& cls = pattern_classes[c];
        bool independent = true;
        for (std::size_t i = 0; i < cls.size() && independent; ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (g.adjacent(cls[i], cls[j])) {
                    independent = false;
                    break;
                }
        if (independent) {
            parts.classes.push_back(cls);
            parts.keys.push_back(keys[c]);
        } else {
            parts.uniform_patterns = false;
            for (int v : cls) {
                parts.classes.push_back({v});
                parts.keys.push_back(keys[c] + "#" + format_element(zd[v]));
            }
        }
    }
    auto part_of = parts.class_of(n);
    return {detail::annotate(std::move(g), zd, part_of, spec), std::move(parts), std::move(zd)};
}

/// Beck's graph Gamma'(R): every element is a vertex, edge iff ab = 0 and a != b.
inline RingGraph gamma_beck(const RingSpec& spec, std::uint64_t cap = default_enumeration_cap) {
    auto elems = enumerate_elements(spec, cap);
    const std::size_t n = elems.size();
    BitMatrix adj(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (product_is_zero(elems[u], elems[v], spec)) {
                adj.set(u, v);
                adj.set(v, u);
            }
    Graph g = Graph::from_matrix(std::move(adj));
    auto parts = PartiteStructure::singletons(n);
    return {detail::annotate(std::move(g), elems, {}, spec), std::move(parts), std::move(elems)};
}

/// g plus m isolated vertices plus one vertex adjacent to everything else.
/// New vertices follow the originals; the dominating vertex comes last.
inline Graph add_isolated_and_dominating(const Graph& g, std::size_t m) {
    const std::size_t n = g.size();
    auto edges = g.edges();
    const int dom = static_cast<int>(n + m);
    for (int v = 0; v < dom; ++v) edges.emplace_back(v, dom);
    std::vector<VertexInfo> info = g.annotations();
    for (std::size_t i = 0; i < m; ++i) info.push_back({"iso" + std::to_string(i), std::nullopt});
    info.push_back({"dom", std::nullopt});
    return Graph(n + m + 1, edges).with_annotations(std::move(info));
}

}  // namespace zdl
