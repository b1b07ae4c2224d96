#pragma once

// Partite truncation: contract every partite class to one vertex, then lift an
// optimal labelling of the contracted graph back to the original graph.

#include <zdl/graph.hpp>
#include <zdl/l21.hpp>
#include <zdl/zdg.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zdl {

struct TruncationResult {
    Graph truncated;
    std::vector<int> class_of;  // original vertex -> truncated vertex
    std::vector<int> sizes;     // class cardinalities
};

inline TruncationResult partite_truncation(const Graph& g, const PartiteStructure& parts) {
    check_partition(g, parts);
    TruncationResult r;
    r.class_of = parts.class_of(g.size());
    for (const auto& c : parts.classes) r.sizes.push_back(static_cast<int>(c.size()));
    std::set<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = r.class_of[u], b = r.class_of[v];
        edges.emplace(std::min(a, b), std::max(a, b));
    }
    std::vector<VertexInfo> info(parts.size());
    for (std::size_t c = 0; c < parts.size(); ++c) info[c] = {parts.keys.empty() ? std::to_string(c) : parts.keys[c], static_cast<int>(c)};
    r.truncated = Graph(parts.size(), {edges.begin(), edges.end()}).with_annotations(std::move(info), g.ring());
    return r;
}

/// True iff every pair of distinct classes induces a complete or an empty bipartite graph.
inline bool check_uniform_bipartite(const Graph& g, const PartiteStructure& parts) {
    check_partition(g, parts);
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            std::size_t hits = 0;
            for (int u : parts.classes[a])
                for (int v : parts.classes[b]) hits += g.adjacent(u, v);
            if (hits != 0 && hits != parts.classes[a].size() * parts.classes[b].size()) return false;
        }
    return true;
}

struct DiameterRelation {
    int original = 0;
    int truncated = 0;
    std::string relation;  // "<=" when the original has diameter at most 2, "=" otherwise
    bool holds = false;
};

inline DiameterRelation diameter_relation_check(const Graph& g, const PartiteStructure& parts) {
    auto dg = diameter(g);
    if (!dg) throw InvalidArgument("diameter relation needs a connected graph");
    if (!check_uniform_bipartite(g, parts)) throw NotApplicable("partite classes are not uniform bipartite");
    auto t = partite_truncation(g, parts);
    auto dt = diameter(t.truncated);
    DiameterRelation r;
    r.original = *dg;
    r.truncated = dt ? *dt : -1;
    if (*dg <= 2) {
        r.relation = "<=";
        r.holds = dt && *dt <= *dg;
    } else {
        r.relation = "=";
        r.holds = dt && *dt == *dg;
    }
    return r;
}

/// One class per distinct label of f, of maximum cardinality within its label group.
struct RepresentativeSet {
    std::vector<int> classes;      // representatives in ascending label order
    std::vector<int> group_label;  // label of each group, ascending
    std::vector<int> group_of;     // class -> group index
};

/// Ties between classes of equal size go to the smaller class index.
inline RepresentativeSet representative_classes(const Labelling& f, const PartiteStructure& parts) {
    if (f.size() != parts.size()) throw InvalidArgument("labelling size does not match class count");
    RepresentativeSet r;
    std::map<int, int> best;  // label -> class
    for (std::size_t c = 0; c < parts.size(); ++c) {
        auto [it, fresh] = best.emplace(f[c], static_cast<int>(c));
        if (!fresh && parts.classes[c].size() > parts.classes[it->second].size()) it->second = static_cast<int>(c);
    }
    std::map<int, int> group_index;
    for (auto [label, cls] : best) {
        group_index[label] = static_cast<int>(r.classes.size());
        r.classes.push_back(cls);
        r.group_label.push_back(label);
    }
    r.group_of.resize(parts.size());
    for (std::size_t c = 0; c < parts.size(); ++c) r.group_of[c] = group_index[f[c]];
    return r;
}

/// |V| + k - n for diameter 2; sum of representative sizes + k - |C| for diameter >= 3.
inline int lift_lambda(int k, const PartiteStructure& parts, const RepresentativeSet& reps, int diam) {
    if (diam <= 1) throw NotApplicable("lift needs diameter >= 2; a complete graph K_n has lambda 2n - 2 directly");
    if (diam == 2) {
        std::size_t total = 0;
        for (const auto& c : parts.classes) total += c.size();
        return static_cast<int>(total) + k - static_cast<int>(parts.size());
    }
    int sum = 0;
    for (int c : reps.classes) sum += static_cast<int>(parts.classes[c].size());
    return sum + k - static_cast<int>(reps.classes.size());
}

/// Block construction: the group with the i-th smallest label starts at that label
/// plus the extra room taken by the larger representatives below it; the vertices
/// of a class take consecutive labels from its group's start.
inline Labelling lift_labelling(const Graph& g, const PartiteStructure& parts, const Labelling& f) {
    if (!check_uniform_bipartite(g, parts)) throw NotApplicable("partite classes are not uniform bipartite");
    auto t = partite_truncation(g, parts);
    if (!validate(t.truncated, f).empty()) throw InvalidArgument("labelling is not valid on the truncation");
    auto reps = representative_classes(f, parts);
    std::vector<int> start(reps.classes.size());
    int shift = 0;
    for (std::size_t i = 0; i < reps.classes.size(); ++i) {
        start[i] = reps.group_label[i] + shift;
        shift += static_cast<int>(parts.classes[reps.classes[i]].size()) - 1;
    }
    std::vector<int> labels(g.size(), 0);
    for (std::size_t c = 0; c < parts.size(); ++c) {
        int s = start[reps.group_of[c]];
        for (std::size_t i = 0; i < parts.classes[c].size(); ++i) labels[parts.classes[c][i]] = s + static_cast<int>(i);
    }
    return Labelling(std::move(labels));
}

struct LiftResult {
    TruncationResult truncation;
    LambdaReport truncation_lambda;
    RepresentativeSet representatives;
    int diameter = 0;
    int lambda = 0;
    Labelling labelling;
};

namespace detail {

/// Same-class vertices must be at distance exactly 2.
inline void require_classes_at_distance_two(const Graph& g, const PartiteStructure& parts) {
    for (const auto& cls : parts.classes) {
        if (cls.size() < 2) continue;
        auto d = bfs(g, cls[0]);
        for (std::size_t i = 1; i < cls.size(); ++i)
            if (d[cls[i]] != 2) throw NotApplicable("vertices of one partite class are not at distance 2");
    }
}

}  // namespace detail

/// Full pipeline: uniformity and diameter checks, exact lambda of the truncation,
/// representatives from its witness, then the lifted value and labelling.
inline LiftResult lift(const Graph& g, const PartiteStructure& parts, const SolverOptions& opts = {}) {
    if (!check_uniform_bipartite(g, parts)) throw NotApplicable("partite classes are not uniform bipartite");
    auto d = diameter(g);
    if (!d) throw NotApplicable("lift needs a connected graph");
    if (*d <= 1) throw NotApplicable("lift needs diameter >= 2; a complete graph K_n has lambda 2n - 2 directly");
    detail::require_classes_at_distance_two(g, parts);

    LiftResult r;
    r.diameter = *d;
    r.truncation = partite_truncation(g, parts);
    r.truncation_lambda = lambda_exact(r.truncation.truncated, opts);
    if (!r.truncation_lambda.optimal) throw CapExceeded("lift: truncation lambda", static_cast<long long>(r.truncation.truncated.size()), static_cast<long long>(opts.max_vertices));
    const Labelling& f = *r.truncation_lambda.witness;
    if (*d == 2) {
        std::set<int> distinct(f.labels().begin(), f.labels().end());
        if (distinct.size() != f.size()) throw Error("lift: minimal truncation labelling is not injective in the diameter-2 case");
    }
    r.representatives = representative_classes(f, parts);
    r.lambda = lift_lambda(r.truncation_lambda.lambda, parts, r.representatives, *d);
    r.labelling = lift_labelling(g, parts, f);
    return r;
}

/// Lifted values over every optimal labelling of the truncation, ascending.
inline std::vector<int> lift_lambda_over_optima(const Graph& g, const PartiteStructure& parts, std::size_t limit = 200'000) {
    auto d = diameter(g);
    if (!d || *d <= 1) throw NotApplicable("lift needs a connected graph of diameter >= 2");
    auto t = partite_truncation(g, parts);
    int k = lambda_exact(t.truncated, SolverOptions{.max_vertices = 64, .lexmin_witness = false}).lambda;
    std::set<int> values;
    for (const auto& f : enumerate_span_labellings(t.truncated, k, limit))
        values.insert(lift_lambda(k, parts, representative_classes(f, parts), *d));
    return {values.begin(), values.end()};
}

}  // namespace zdl
