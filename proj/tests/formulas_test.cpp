#include <zdl/formulas.hpp>

#include <gtest/gtest.h>

#include <array>
#include <random>

using namespace zdl;

namespace {

bool has_kind(const std::vector<Discrepancy>& d, const std::string& kind) {
    return std::any_of(d.begin(), d.end(), [&](const Discrepancy& x) { return x.kind == kind; });
}

}  // namespace

TEST(FormulaZpn, Examples) {
    EXPECT_EQ(lambda_zpn(2, 3), 3);
    EXPECT_EQ(lambda_zpn(3, 2), 2);
    EXPECT_EQ(lambda_zpn(2, 4), 7);
    EXPECT_EQ(lambda_exact(gamma(parse_ring_spec("Z16")).graph).lambda, 7);
    EXPECT_THROW(lambda_zpn(4, 3), InvalidArgument);
    EXPECT_THROW(lambda_zpn(3, 1), InvalidArgument);
}

TEST(FormulaZpn, MatchesExactOnSmallGraphs) {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 5}, {7, 2}, {13, 2}}) {
        auto g = gamma(RingSpec({Factor::local(p, n)})).graph;
        ASSERT_LE(g.size(), 16U);
        EXPECT_EQ(lambda_exact(g).lambda, lambda_zpn(p, n)) << p << "^" << n;
    }
}

TEST(ConstructZpn, Examples) {
    auto a = construct_zpn(2, 3);
    EXPECT_TRUE(a.valid());
    EXPECT_EQ(a.span(), 3);
    auto b = construct_zpn(3, 3);
    EXPECT_TRUE(b.valid());
    EXPECT_EQ(b.ring.graph.size(), 8U);
    EXPECT_EQ(b.span(), 9);
    EXPECT_EQ(lambda_exact(b.ring.graph).lambda, 9);
    auto c = construct_zpn(5, 3);
    EXPECT_TRUE(c.valid());
    EXPECT_EQ(c.span(), 27);
}

TEST(ConstructZpn, TopLayerUsesEvenLabels) {
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}, {5, 3}, {3, 4}, {7, 3}}) {
        auto c = construct_zpn(p, n);
        auto f = Factor::local(p, n);
        std::vector<int> top;
        for (std::size_t v = 0; v < c.ring.elements.size(); ++v)
            if (valuation(c.ring.elements[v][0], f) == n - 1) top.push_back(c.labelling[v]);
        std::sort(top.begin(), top.end());
        ASSERT_EQ(top.size(), static_cast<std::size_t>(p - 1));
        for (std::size_t b = 0; b < top.size(); ++b) EXPECT_EQ(top[b], 2 * static_cast<int>(b)) << p << "^" << n;
    }
}

TEST(FormulaZpnZqm, Examples) {
    EXPECT_EQ(lambda_zpn_zqm(2, 3, 3, 3), 111);
    EXPECT_EQ(lambda_zpn_zqm(2, 2, 3, 2), 19);
    EXPECT_EQ(lambda_zpn_zqm(2, 2, 3, 3), 56);
    EXPECT_EQ(lambda_zpn_zqm(3, 3, 2, 3), 111);  // orientation
    EXPECT_EQ(zpn_zqm_case(2, 2, 3, 3), "n=2,m>=3");
}

TEST(ConstructZpnZqm, Z8xZ27) {
    auto c = construct_zpn_zqm(2, 3, 3, 3);
    EXPECT_EQ(c.ring.graph.size(), 143U);
    EXPECT_TRUE(c.valid());
    EXPECT_EQ(c.formula, 111);
    // a valid labelling below the formula is itself the discrepancy
    EXPECT_LE(c.span(), 111);
    auto d = discrepancies(c);
    if (c.span() != 111) EXPECT_TRUE(has_kind(d, "span_below_formula"));
    EXPECT_TRUE(construction_accepted(c, d));
}

TEST(ConstructZpnZqm, GridIsValid) {
    for (auto [p, n, q, m] : std::vector<std::array<int, 4>>{{2, 2, 3, 2}, {2, 2, 2, 2}, {2, 3, 2, 4}, {3, 3, 3, 3},
                                                             {2, 2, 5, 2}, {3, 2, 2, 3}, {2, 2, 2, 4}}) {
        auto c = construct_zpn_zqm(p, n, q, m);
        EXPECT_TRUE(c.valid()) << c.params;
        EXPECT_TRUE(construction_accepted(c, discrepancies(c))) << c.params;
    }
}

TEST(ConstructZpnZqm, SmallCaseAgainstExact) {
    // Z4 x Z9: 23 vertices
    auto c = construct_zpn_zqm(2, 2, 3, 2);
    auto ex = lambda_exact(c.ring.graph);
    ASSERT_TRUE(ex.optimal);
    EXPECT_EQ(ex.lambda, 17);
    EXPECT_EQ(c.formula, 19);
    EXPECT_TRUE(has_kind(discrepancies(c, ex), "exact_disagrees"));
}

TEST(FormulaFqZpn, Examples) {
    EXPECT_EQ(lambda_fq_zpn(3, 2, 3).value, 11);
    EXPECT_EQ(lambda_fq_zpn(3, 2, 3).case_id, 1);
    EXPECT_EQ(lambda_fq_zpn(2, 2, 3).value, 9);
    EXPECT_EQ(lambda_fq_zpn(2, 2, 3).case_id, 2);
    EXPECT_EQ(lambda_fq_zpn(2, 2, 2).value, 4);
    EXPECT_EQ(lambda_fq_zpn(2, 2, 2).case_id, 3);
    EXPECT_EQ(lambda_fq_zpn(5, 2, 2).value, 9);
    EXPECT_EQ(lambda_fq_zpn(5, 2, 2).case_id, 4);
    EXPECT_THROW(lambda_fq_zpn(6, 2, 2), InvalidArgument);
}

TEST(FormulaFqZpn, ThresholdEquality) {
    // q = p + 1 exactly falls in the last case
    EXPECT_EQ(lambda_fq_zpn(3, 2, 2).case_id, 4);
    EXPECT_EQ(lambda_fq_zpn(4, 3, 2).case_id, 4);
    EXPECT_EQ(lambda_fq_zpn(2, 3, 2).case_id, 3);
    // (p^n - 1)/(p^{n-1} - 1) is never an integer for n >= 3; straddle it instead
    EXPECT_EQ(lambda_fq_zpn(2, 2, 3).case_id, 2);  // 2 < 7/3
    EXPECT_EQ(lambda_fq_zpn(3, 2, 3).case_id, 1);  // 3 > 7/3
    EXPECT_EQ(lambda_fq_zpn(3, 3, 3).case_id, 2);  // 3 < 26/8
    EXPECT_EQ(lambda_fq_zpn(4, 3, 3).case_id, 1);
    // values at q = p + 1 against the exact solver
    auto c = construct_fq_zpn(3, 2, 2);
    auto ex = lambda_exact(c.ring.graph);
    EXPECT_TRUE(c.valid());
    EXPECT_EQ(ex.lambda, lambda_fq_zpn(3, 2, 2).value);
}

TEST(ConstructFqZpn, Examples) {
    auto a = construct_fq_zpn(2, 2, 2);
    EXPECT_EQ(a.ring.graph.size(), 5U);
    EXPECT_TRUE(a.valid());
    EXPECT_EQ(a.span(), 4);
    EXPECT_EQ(lambda_exact(a.ring.graph).lambda, 4);
    auto b = construct_fq_zpn(3, 2, 3);
    EXPECT_TRUE(b.valid());
    EXPECT_EQ(b.span(), 11);
    auto c = construct_fq_zpn(2, 2, 3);
    EXPECT_TRUE(c.valid());
    EXPECT_LE(c.span(), 9);
    EXPECT_TRUE(construction_accepted(c, discrepancies(c)));
}

TEST(FormulaMultipartite, Examples) {
    EXPECT_EQ(lambda_complete_multipartite({1, 1, 1}), 4);
    EXPECT_EQ(lambda_complete_multipartite({2, 2}), 4);
    EXPECT_EQ(lambda_complete_multipartite({3, 2, 1}), 7);
    EXPECT_EQ(lambda_exact(graphs::complete_multipartite({3, 2, 1})).lambda, 7);
    EXPECT_THROW(lambda_complete_multipartite({3}), InvalidArgument);
}

TEST(ConstructMultipartite, MatchesFormula) {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c) {
                std::vector<int> sizes{a, b};
                if (c) sizes.push_back(c);
                auto k = construct_multipartite(sizes);
                EXPECT_TRUE(k.valid());
                EXPECT_EQ(k.span(), k.formula);
            }
}

TEST(FormulaBeck, Fields) {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        EXPECT_EQ(lambda_beck_field(q), q);
        EXPECT_EQ(lambda_exact(gamma_beck(parse_ring_spec("F" + std::to_string(q))).graph).lambda, q);
    }
}

TEST(FormulaBeck, ShiftArithmetic) {
    EXPECT_EQ(lambda_beck_from_gamma(3, 8, 3, 2), 9);
    EXPECT_EQ(lambda_beck_from_gamma(2, 9, 2, 1), 10);
    EXPECT_EQ(lambda_add_dominating(4, 2, 2), 8);
    EXPECT_THROW(lambda_add_dominating(4, 2, 3), NotApplicable);
    EXPECT_THROW(lambda_beck_from_gamma(5, 8, 6, 3), NotApplicable);
}

TEST(FormulaBeck, LocalRingsByExactSolver) {
    // Gamma'(Z_{p^n}) has lambda p^n: the units fill the holes of the zero-divisor labelling
    for (const char* s : {"Z4", "Z8", "Z9"}) {
        auto g = gamma_beck(parse_ring_spec(s)).graph;
        EXPECT_EQ(lambda_exact(g).lambda, static_cast<int>(g.size())) << s;
    }
}

TEST(Discrepancy, Kinds) {
    auto c = construct_zpn_zqm(3, 3, 2, 5);  // Z27 x Z32
    EXPECT_TRUE(c.valid());
    auto d = discrepancies(c);
    EXPECT_TRUE(has_kind(d, "formula_below_lower_bound"));
    EXPECT_FALSE(has_kind(d, "construction_exceeds_formula"));
    for (const auto& x : d) EXPECT_TRUE(x.certified);

    Construction bad = construct_zpn(2, 3);
    bad.labelling = Labelling({0, 0, 0});
    bad.violations = validate(bad.ring.graph, bad.labelling);
    EXPECT_FALSE(construction_accepted(bad, discrepancies(bad)));

    Construction over = construct_zpn(2, 4);
    over.labelling = Labelling({0, 2, 4, 6, 8, 10, 12});
    over.violations = validate(over.ring.graph, over.labelling);
    ASSERT_TRUE(over.valid());
    auto od = discrepancies(over);
    EXPECT_TRUE(has_kind(od, "construction_exceeds_formula"));
    EXPECT_FALSE(construction_accepted(over, od));
}
