#include <zdl/truncate.hpp>
#include <zdl/zdg.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace zdl;

namespace {

/// Zero-pattern class -> vertex of Gamma(Z_2^n) with the same support.
std::vector<int> support_map(const RingGraph& rg, const RingGraph& boolean) {
    std::vector<int> map;
    for (const auto& cls : rg.parts.classes) {
        Element s;
        for (auto x : rg.elements[cls.front()]) s.push_back(x != 0);
        auto it = std::find(boolean.elements.begin(), boolean.elements.end(), s);
        map.push_back(it == boolean.elements.end() ? -1 : static_cast<int>(it - boolean.elements.begin()));
    }
    return map;
}

int boolean_vertex(const RingGraph& b, const Element& support) {
    return static_cast<int>(std::find(b.elements.begin(), b.elements.end(), support) - b.elements.begin());
}

/// A span-10 labelling of Gamma(Z_2^4) in which the supports {1,2,3}, {1,2,4},
/// {1,3,4} share the label of {2,3,4} and every other vertex has its own label.
Labelling shared_triples_labelling() {
    auto b = gamma(parse_ring_spec("Z2xZ2xZ2xZ2"));
    const std::vector<int> triples{boolean_vertex(b, {1, 1, 1, 0}), boolean_vertex(b, {1, 1, 0, 1}),
                                   boolean_vertex(b, {1, 0, 1, 1})};
    const int keep = boolean_vertex(b, {0, 1, 1, 1});
    std::vector<int> rest;  // vertices of the merged graph, in original order
    for (int v = 0; v < static_cast<int>(b.graph.size()); ++v)
        if (std::find(triples.begin(), triples.end(), v) == triples.end()) rest.push_back(v);
    std::vector<int> pos(b.graph.size());
    for (std::size_t i = 0; i < rest.size(); ++i) pos[rest[i]] = static_cast<int>(i);
    for (int t : triples) pos[t] = pos[keep];
    std::set<Edge> edges;
    for (auto [u, v] : b.graph.edges())
        if (pos[u] != pos[v]) edges.emplace(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
    Graph merged(rest.size(), {edges.begin(), edges.end()});

    std::vector<int> found;
    for_each_labelling(merged, 10, [&](const std::vector<int>& lab) {
        if (std::set<int>(lab.begin(), lab.end()).size() != lab.size()) return true;
        found = lab;
        return false;
    });
    if (found.empty()) return {};
    std::vector<int> full(b.graph.size());
    for (std::size_t v = 0; v < full.size(); ++v) full[v] = found[pos[v]];
    return Labelling(full);
}

}  // namespace

TEST(Truncation, CompleteMultipartiteToComplete) {
    for (const auto& sizes : std::vector<std::vector<int>>{{2, 3}, {1, 2, 3}, {3, 3, 3, 1}}) {
        auto g = graphs::complete_multipartite(sizes);
        auto t = partite_truncation(g, parts_from_annotations(g));
        EXPECT_EQ(t.truncated.edges(), graphs::complete(sizes.size()).edges());
        EXPECT_EQ(t.sizes, sizes);
    }
}

TEST(Truncation, FourFieldsToBooleanRing) {
    auto b = gamma(parse_ring_spec("Z2xZ2xZ2xZ2"));
    for (const char* s : {"F2xF3xF4xF5", "F3xF3xF3xF3", "F2xF2xF3xF4"}) {
        auto rg = gamma(parse_ring_spec(s));
        auto t = partite_truncation(rg.graph, rg.parts);
        EXPECT_EQ(t.truncated.size(), 14U);
        EXPECT_TRUE(adjacency_preserved_under(support_map(rg, b), t.truncated, b.graph)) << s;
    }
}

TEST(Truncation, SingletonsGiveTheSameGraph) {
    auto g = gamma(parse_ring_spec("Z27")).graph;
    auto t = partite_truncation(g, PartiteStructure::singletons(g.size()));
    EXPECT_EQ(t.truncated.edges(), g.edges());
    std::vector<int> id(g.size());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_EQ(t.class_of, id);
}

TEST(Truncation, RejectsBadPartition) {
    auto g = graphs::path(3);
    PartiteStructure p;
    p.classes = {{0, 1}, {2}};
    EXPECT_THROW(partite_truncation(g, p), InvalidArgument);
}

TEST(Uniform, Examples) {
    auto rg = gamma(parse_ring_spec("F2xF3xF4"));
    EXPECT_TRUE(check_uniform_bipartite(rg.graph, rg.parts));
    Graph k22m(4, {{0, 2}, {0, 3}, {1, 2}});
    PartiteStructure p;
    p.classes = {{0, 1}, {2, 3}};
    EXPECT_FALSE(check_uniform_bipartite(k22m, p));
    EXPECT_TRUE(check_uniform_bipartite(graphs::cycle(7), PartiteStructure::singletons(7)));
}

TEST(DiameterRelation, Examples) {
    auto a = gamma(parse_ring_spec("F3xF3"));
    auto ra = diameter_relation_check(a.graph, a.parts);
    EXPECT_EQ(ra.original, 2);
    EXPECT_EQ(ra.truncated, 1);
    EXPECT_EQ(ra.relation, "<=");
    EXPECT_TRUE(ra.holds);

    auto b = gamma(parse_ring_spec("Z2xZ2xZ2"));
    auto rb = diameter_relation_check(b.graph, b.parts);
    EXPECT_EQ(rb.original, 3);
    EXPECT_EQ(rb.truncated, 3);
    EXPECT_TRUE(rb.holds);

    auto c = gamma(parse_ring_spec("F2xF3xF2"));
    auto rc = diameter_relation_check(c.graph, c.parts);
    EXPECT_EQ(rc.original, 3);
    EXPECT_EQ(rc.truncated, 3);
    EXPECT_EQ(rc.relation, "=");
    EXPECT_TRUE(rc.holds);

    EXPECT_THROW(diameter_relation_check(graphs::empty(2), PartiteStructure::singletons(2)), InvalidArgument);
}

TEST(Representatives, Examples) {
    PartiteStructure p;
    p.classes = {{0}, {1, 2, 3}, {4, 5, 6, 7, 8}};
    auto inj = representative_classes(Labelling({0, 2, 4}), p);
    EXPECT_EQ(inj.classes, (std::vector<int>{0, 1, 2}));

    auto shared = representative_classes(Labelling({0, 3, 3}), p);
    EXPECT_EQ(shared.classes, (std::vector<int>{0, 2}));
    EXPECT_EQ(shared.group_label, (std::vector<int>{0, 3}));
    EXPECT_EQ(shared.group_of, (std::vector<int>{0, 1, 1}));

    PartiteStructure tie;
    tie.classes = {{0, 1}, {2}, {3, 4}};
    EXPECT_EQ(representative_classes(Labelling({1, 0, 1}), tie).classes, (std::vector<int>{1, 0}));
}

TEST(Representatives, SharedTriplesGiveElevenClasses) {
    auto f = shared_triples_labelling();
    ASSERT_EQ(f.size(), 14U);
    auto b = gamma(parse_ring_spec("Z2xZ2xZ2xZ2"));
    EXPECT_TRUE(is_valid(b.graph, f));
    EXPECT_EQ(f.span(), 10);
    auto reps = representative_classes(f, b.parts);
    EXPECT_EQ(reps.classes.size(), 11U);
    std::set<int> chosen(reps.classes.begin(), reps.classes.end());
    for (const Element& t : std::vector<Element>{{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}})
        EXPECT_FALSE(chosen.count(boolean_vertex(b, t)));
}

TEST(LiftLambda, Examples) {
    auto k22 = graphs::complete_multipartite({2, 2});
    auto p = parts_from_annotations(k22);
    EXPECT_EQ(lift_lambda(2, p, representative_classes(Labelling({0, 2}), p), 2), 4);
    EXPECT_EQ(lambda_exact(k22).lambda, 4);

    auto b = gamma(parse_ring_spec("Z2xZ2xZ2xZ2"));
    auto f = shared_triples_labelling();
    ASSERT_EQ(f.size(), 14U);
    EXPECT_EQ(lift_lambda(10, b.parts, representative_classes(f, b.parts), 3), 10);

    auto c = gamma(parse_ring_spec("F2xF3xF2"));
    EXPECT_EQ(c.graph.size(), 9U);
    auto reps = representative_classes(Labelling({0, 1, 2, 3, 4, 5}), c.parts);
    EXPECT_EQ(lift_lambda(5, c.parts, reps, 3), 8);

    EXPECT_THROW(lift_lambda(2, p, representative_classes(Labelling({0, 2}), p), 1), NotApplicable);
}

TEST(LiftLambda, SymbolicFourFieldFormula) {
    auto f = shared_triples_labelling();
    ASSERT_EQ(f.size(), 14U);
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> q(4);
        for (int i = 0; i < 4; ++i) q[i] = (mask >> i & 1) ? 3 : 2;
        if (!std::is_sorted(q.begin(), q.end())) continue;
        std::string spec = "F" + std::to_string(q[0]);
        for (int i = 1; i < 4; ++i) spec += "xF" + std::to_string(q[i]);
        auto rg = gamma(parse_ring_spec(spec));
        auto b = gamma(parse_ring_spec("Z2xZ2xZ2xZ2"));
        auto map = support_map(rg, b);
        std::vector<int> lab(rg.parts.size());
        for (std::size_t c = 0; c < lab.size(); ++c) lab[c] = f[map[c]];
        int lifted = lift_lambda(10, rg.parts, representative_classes(Labelling(lab), rg.parts), *diameter(rg.graph));
        int s1 = 0, s2 = 0;
        for (int i = 0; i < 4; ++i) s1 += q[i] - 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) s2 += (q[i] - 1) * (q[j] - 1);
        EXPECT_EQ(lifted, s1 + s2 + (q[1] - 1) * (q[2] - 1) * (q[3] - 1) - 1) << spec;
    }
}

TEST(LiftLabelling, Examples) {
    auto z27 = gamma(parse_ring_spec("Z27")).graph;
    auto f = *lambda_exact(z27).witness;
    EXPECT_EQ(lift_labelling(z27, PartiteStructure::singletons(z27.size()), f), f);

    auto k22 = graphs::complete_multipartite({2, 2});
    auto p = parts_from_annotations(k22);
    auto lifted = lift_labelling(k22, p, Labelling({0, 2}));
    EXPECT_EQ(lifted.labels(), (std::vector<int>{0, 1, 3, 4}));
    EXPECT_TRUE(is_valid(k22, lifted));

    auto c = gamma(parse_ring_spec("F2xF3xF2"));
    auto r = lift(c.graph, c.parts);
    EXPECT_EQ(r.lambda, 8);
    EXPECT_EQ(r.labelling.span(), 8);
    EXPECT_TRUE(is_valid(c.graph, r.labelling));
}

TEST(LiftLabelling, EveryOptimumOfTruncationLiftsValidly) {
    for (const char* s : {"F2xF3xF2", "F2xF2xF4", "F3xF3xF2"}) {
        auto rg = gamma(parse_ring_spec(s));
        auto t = partite_truncation(rg.graph, rg.parts);
        const int k = lambda_exact(t.truncated).lambda;
        const int d = *diameter(rg.graph);
        for (const auto& f : enumerate_span_labellings(t.truncated, k)) {
            auto lifted = lift_labelling(rg.graph, rg.parts, f);
            ASSERT_TRUE(is_valid(rg.graph, lifted)) << s;
            EXPECT_EQ(lifted.span(), lift_lambda(k, rg.parts, representative_classes(f, rg.parts), d)) << s;
        }
    }
}

TEST(Lift, Refusals) {
    auto k2 = gamma(parse_ring_spec("F2xF2"));
    EXPECT_THROW(lift(k2.graph, k2.parts), NotApplicable);
    auto z8 = gamma(parse_ring_spec("Z8"));
    EXPECT_FALSE(z8.parts.uniform_patterns);
    Graph k22m(4, {{0, 2}, {0, 3}, {1, 2}});
    PartiteStructure p;
    p.classes = {{0, 1}, {2, 3}};
    EXPECT_THROW(lift(k22m, p), NotApplicable);
    EXPECT_THROW(lift_labelling(k22m, p, Labelling({0, 2})), NotApplicable);
}

TEST(TruncateInvariants, ReducedGrid) {
    const std::vector<int> qs{2, 3, 4, 5};
    for (int nf = 2; nf <= 3; ++nf) {
        std::vector<int> idx(nf, 0);
        while (true) {
            std::string spec;
            for (int i = 0; i < nf; ++i) spec += (i ? "xF" : "F") + std::to_string(qs[idx[i]]);
            auto rg = gamma(parse_ring_spec(spec));
            auto t = partite_truncation(rg.graph, rg.parts);
            EXPECT_EQ(is_connected(t.truncated), is_connected(rg.graph)) << spec;
            EXPECT_TRUE(diameter_relation_check(rg.graph, rg.parts).holds) << spec;
            if (rg.graph.size() <= 20 && *diameter(rg.graph) >= 2) {
                auto r = lift(rg.graph, rg.parts);
                EXPECT_TRUE(is_valid(rg.graph, r.labelling)) << spec;
                EXPECT_EQ(r.labelling.span(), r.lambda) << spec;
                EXPECT_GE(r.lambda, lambda_exact(rg.graph).lambda) << spec;
            }
            int i = nf - 1;
            while (i >= 0 && ++idx[i] == static_cast<int>(qs.size())) idx[i--] = 0;
            if (i < 0) break;
            // non-decreasing tuples only
            for (int j = i + 1; j < nf; ++j) idx[j] = idx[i];
        }
    }
}
