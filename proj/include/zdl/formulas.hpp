#pragma once

// Closed-form lambda values for ring families and first-fit constructions that
// follow the block orders of their proofs, plus a discrepancy report comparing
// construction, formula and certified bounds.

#include <zdl/l21.hpp>
#include <zdl/ring.hpp>
#include <zdl/truncate.hpp>
#include <zdl/zdg.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace zdl {

// ---------------------------------------------------------------------------
// closed forms

namespace detail {

inline void require_prime(std::uint64_t p, const char* name) {
    if (!is_prime(p)) throw InvalidArgument(std::string(name) + " must be prime, got " + std::to_string(p));
}

inline void require_exponent(int n, int least, const char* name) {
    if (n < least) throw InvalidArgument(std::string(name) + " must be >= " + std::to_string(least));
}

inline long long ipow_ll(long long b, int e) { return static_cast<long long>(ipow(static_cast<std::uint64_t>(b), e)); }

}  // namespace detail

/// lambda(Gamma(Z_{p^n})): 2p - 4 for n = 2, p^{n-1} + p - 3 for n >= 3.
inline long long lambda_zpn(long long p, int n) {
    detail::require_prime(p, "p");
    detail::require_exponent(n, 2, "n");
    if (n == 2) return 2 * p - 4;
    return detail::ipow_ll(p, n - 1) + p - 3;
}

/// (p, n, q, m) reordered so that p^n <= q^m.
struct ZpnZqm {
    long long p, q;
    int n, m;
};

inline ZpnZqm orient(long long p, int n, long long q, int m) {
    if (detail::ipow_ll(p, n) > detail::ipow_ll(q, m)) return {q, p, m, n};
    return {p, q, n, m};
}

inline std::string zpn_zqm_case(long long p, int n, long long q, int m) {
    auto o = orient(p, n, q, m);
    if (o.n >= 3 && o.m >= 3) return "n,m>=3";
    if (o.n == 2 && o.m == 2) return "n=m=2";
    if (o.n == 2) return "n=2,m>=3";
    return "n>=3,m=2";
}

/// lambda(Gamma(Z_{p^n} x Z_{q^m})) after orienting p^n <= q^m.
inline long long lambda_zpn_zqm(long long p, int n, long long q, int m) {
    detail::require_prime(p, "p");
    detail::require_prime(q, "q");
    detail::require_exponent(n, 2, "n");
    detail::require_exponent(m, 2, "m");
    auto o = orient(p, n, q, m);
    const long long pq = o.p * o.q;
    if (o.n >= 3 && o.m >= 3) return detail::ipow_ll(o.p, o.n - 1) * detail::ipow_ll(o.q, o.m) + pq - 3;
    if (o.n == 2 && o.m == 2) return o.p * o.q * o.q + pq - 5;
    if (o.n == 2) return o.p * detail::ipow_ll(o.q, o.m) + pq - 4;
    return detail::ipow_ll(o.p, o.n - 1) * o.q * o.q + pq - 4;
}

struct CaseValue {
    long long value;
    int case_id;  // 1..4
};

/// lambda(Gamma(F_q x Z_{p^n})). Thresholds compared in integers:
/// q > (p^n - 1)/(p^{n-1} - 1)  <=>  q (p^{n-1} - 1) > p^n - 1.
inline CaseValue lambda_fq_zpn(long long q, long long p, int n) {
    if (!as_prime_power(static_cast<std::uint64_t>(q))) throw InvalidArgument("q must be a prime power, got " + std::to_string(q));
    detail::require_prime(p, "p");
    detail::require_exponent(n, 2, "n");
    const long long pn = detail::ipow_ll(p, n), pn1 = detail::ipow_ll(p, n - 1);
    if (n >= 3) {
        if (q * (pn1 - 1) > pn - 1) return {q * pn1 + p - 3, 1};
        return {pn + p + q - 3, 2};
    }
    if (q < p + 1) return {p * p + p + q - 4, 3};
    return {2 * p * q - 2 * q - 1, 4};
}

/// lambda(K_{m_1,...,m_k}) = sum m_i + k - 2, for k >= 2 classes.
inline long long lambda_complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.size() < 2) throw InvalidArgument("complete multipartite formula needs at least 2 classes");
    long long s = 0;
    for (int m : sizes) {
        if (m < 1) throw InvalidArgument("class sizes must be >= 1");
        s += m;
    }
    return s + static_cast<long long>(sizes.size()) - 2;
}

/// k + m + 2 for g of diameter < 3 with lambda(g) = k, after adding m isolated
/// vertices and a dominating vertex.
inline long long lambda_add_dominating(long long k, long long m, int diam) {
    if (diam >= 3) throw NotApplicable("shift rule needs diameter < 3, got " + std::to_string(diam));
    return k + m + 2;
}

/// k + |R| - |Gamma(R)| + 1 for lambda(Gamma'(R)), given lambda(Gamma(R)) = k.
inline long long lambda_beck_from_gamma(long long k, long long ring_order, long long gamma_order, int diam) {
    if (diam >= 3) throw NotApplicable("Beck shift needs diam(Gamma(R)) < 3, got " + std::to_string(diam));
    return k + ring_order - gamma_order + 1;
}

/// lambda(Gamma'(F_q)) = q; the Beck graph of a field is the star K_{1,q-1}.
inline long long lambda_beck_field(long long q) {
    if (!as_prime_power(static_cast<std::uint64_t>(q))) throw InvalidArgument("q must be a prime power");
    return q;
}

// ---------------------------------------------------------------------------
// constructions

struct Construction {
    std::string family;
    std::string params;
    RingGraph ring;  // graph, parts, elements
    Labelling labelling;
    long long formula = 0;
    std::string order;  // name of the block order used
    std::vector<Violation> violations;

    int span() const { return labelling.span(); }
    bool valid() const { return violations.empty(); }
};

namespace detail {

/// Layer order for vertices of Gamma(Z_{p^n}) keyed by valuation: layers n-1 down
/// to ceil(n/2), then for odd n one vertex of layer floor(n/2), then layers
/// 1..floor(n/2)-1, then whatever is left of layer floor(n/2).
inline std::vector<int> zpn_layer_order(const std::vector<std::pair<int, int>>& vertex_valuation, int n) {
    std::map<int, std::vector<int>> by;
    for (auto [v, val] : vertex_valuation) by[val].push_back(v);
    std::vector<int> out;
    auto take = [&](int val) {
        if (auto it = by.find(val); it != by.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    };
    if (n == 2) {
        take(1);
        return out;
    }
    const int k = n / 2;
    const int top = n % 2 == 0 ? k : k + 1;
    for (int i = n - 1; i >= top; --i) take(i);
    std::vector<int> extra;
    if (n % 2 == 1 && by.count(k) && !by[k].empty()) {
        out.push_back(by[k].front());
        extra.assign(by[k].begin() + 1, by[k].end());
    }
    for (int i = 1; i < k; ++i) take(i);
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

struct NamedOrder {
    std::string name;
    std::vector<std::vector<int>> blocks;
};

inline constexpr int refine_rounds = 8;

/// First fit again with vertices grouped by their current label, label classes
/// taken in ascending or descending order. The span never increases.
inline Labelling refine(const Graph& g, Labelling f, const BitMatrix& d2) {
    for (int r = 0; r < refine_rounds; ++r) {
        std::vector<int> seq(g.size());
        std::iota(seq.begin(), seq.end(), 0);
        const bool up = r % 2 == 1;
        std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) { return up ? f[a] < f[b] : f[a] > f[b]; });
        Labelling next = greedy_upper(g, seq, &d2);
        if (next.span() > f.span()) break;
        f = std::move(next);
    }
    return f;
}

inline Construction best_of(Construction base, const std::vector<NamedOrder>& orders) {
    const BitMatrix d2 = distance_two(base.ring.graph);
    bool first = true;
    for (const auto& o : orders) {
        std::vector<int> seq;
        for (const auto& b : o.blocks) seq.insert(seq.end(), b.begin(), b.end());
        Labelling f = greedy_upper(base.ring.graph, seq, &d2);
        if (first || f.span() < base.labelling.span()) {
            base.labelling = std::move(f);
            base.order = o.name;
            first = false;
        }
    }
    Labelling refined = refine(base.ring.graph, base.labelling, d2);
    if (refined.span() < base.labelling.span()) {
        base.labelling = std::move(refined);
        base.order += " +refined";
    }
    base.violations = validate(base.ring.graph, base.labelling, &d2);
    return base;
}

}  // namespace detail

inline Construction construct_zpn(long long p, int n, std::uint64_t cap = default_enumeration_cap) {
    Construction c;
    c.family = "zpn";
    c.params = "p=" + std::to_string(p) + ",n=" + std::to_string(n);
    c.formula = lambda_zpn(p, n);
    auto f = Factor::local(static_cast<std::uint64_t>(p), n);
    c.ring = gamma(RingSpec({f}, cap), cap);
    std::vector<std::pair<int, int>> vv;
    for (std::size_t v = 0; v < c.ring.elements.size(); ++v) vv.emplace_back(static_cast<int>(v), valuation(c.ring.elements[v][0], f));
    return detail::best_of(std::move(c), {{"layers", {detail::zpn_layer_order(vv, n)}}});
}

inline Construction construct_zpn_zqm(long long p0, int n0, long long q0, int m0, std::uint64_t cap = default_enumeration_cap) {
    auto o = orient(p0, n0, q0, m0);
    const long long p = o.p, q = o.q;
    const int n = o.n, m = o.m;
    Construction c;
    c.family = "zpn-zqm";
    c.params = "p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",q=" + std::to_string(q) + ",m=" + std::to_string(m);
    c.formula = lambda_zpn_zqm(p, n, q, m);
    auto fp = Factor::local(static_cast<std::uint64_t>(p), n);
    auto fq = Factor::local(static_cast<std::uint64_t>(q), m);
    // build with factors in this exact order (no canonical resorting) so component 0 is Z_{p^n}
    c.ring = gamma(RingSpec({fp, fq}, cap), cap);
    const auto& spec_factors = RingSpec({fp, fq}, cap).factors();
    const bool swapped = !(spec_factors[0] == fp);

    const int ce_i = (n + 1) / 2, ce_j = (m + 1) / 2;
    std::vector<std::pair<int, int>> v2, v1;
    std::vector<int> u2, u1, s1, s2, s3, s4r, c2, w1, w2;
    std::vector<std::pair<int, int>> s1_keyed;
    for (std::size_t v = 0; v < c.ring.elements.size(); ++v) {
        const auto& e = c.ring.elements[v];
        const int i = valuation(e[swapped ? 1 : 0], fp);
        const int j = valuation(e[swapped ? 0 : 1], fq);
        const int id = static_cast<int>(v);
        if (i == n && j > 0 && j < m) v2.emplace_back(id, j);
        else if (i == n && j == 0) u2.push_back(id);
        else if (j == m && i > 0 && i < n) v1.emplace_back(id, i);
        else if (j == m && i == 0) u1.push_back(id);
        else if (i == 0 && j > 0 && j < m) w1.push_back(id);
        else if (j == 0 && i > 0 && i < n) w2.push_back(id);
        else if (i > 0 && i < n && j > 0 && j < m) {
            if (i >= ce_i && j >= ce_j) s1_keyed.emplace_back(id, i + j);
            else if (i >= ce_i) s2.push_back(id);
            else if (j >= ce_j) s3.push_back(id);
            else if (i == 1 && j == 1) c2.push_back(id);
            else s4r.push_back(id);
        }
    }
    std::stable_sort(s1_keyed.begin(), s1_keyed.end(), [](auto a, auto b) { return a.second > b.second; });
    for (auto [id, key] : s1_keyed) s1.push_back(id);
    auto V2 = detail::zpn_layer_order(v2, m);
    auto V1 = detail::zpn_layer_order(v1, n);
    return detail::best_of(std::move(c), {
                                             {"V2,U2,V1,U1,S1,C2,S3,S4,S2,W2,W1", {V2, u2, V1, u1, s1, c2, s3, s4r, s2, w2, w1}},
                                             {"V2,U2,S1,C2,S3,S4,S2,U1,W2,W1,V1", {V2, u2, s1, c2, s3, s4r, s2, u1, w2, w1, V1}},
                                         });
}

inline Construction construct_fq_zpn(long long q, long long p, int n, std::uint64_t cap = default_enumeration_cap) {
    Construction c;
    c.family = "fq-zpn";
    auto cv = lambda_fq_zpn(q, p, n);
    c.formula = cv.value;
    c.params = "q=" + std::to_string(q) + ",p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",case=" + std::to_string(cv.case_id);
    auto ff = Factor::field(static_cast<std::uint64_t>(q));
    auto fz = Factor::local(static_cast<std::uint64_t>(p), n);
    c.ring = gamma(RingSpec({ff, fz}, cap), cap);  // fields sort first: component 0 is F_q

    std::vector<std::pair<int, int>> w;
    std::vector<std::pair<int, int>> v3_keyed;
    std::vector<int> v2_units, v1;
    for (std::size_t v = 0; v < c.ring.elements.size(); ++v) {
        const auto& e = c.ring.elements[v];
        const int id = static_cast<int>(v);
        const int j = valuation(e[1], fz);
        if (e[0] == 0 && j > 0) w.emplace_back(id, j);
        else if (e[0] == 0) v2_units.push_back(id);
        else if (j == n) v1.push_back(id);
        else v3_keyed.emplace_back(id, j);
    }
    std::stable_sort(v3_keyed.begin(), v3_keyed.end(), [](auto a, auto b) { return a.second < b.second; });
    std::vector<int> v3;
    for (auto [id, key] : v3_keyed) v3.push_back(id);
    return detail::best_of(std::move(c), {{"W,V3,V2\\W,V1", {detail::zpn_layer_order(w, n), v3, v2_units, v1}}});
}

/// Lift of the labelling 0, 2, ..., 2k-2 of K_k through the natural parts.
inline Construction construct_multipartite(const std::vector<int>& sizes) {
    Construction c;
    c.family = "multipartite";
    c.formula = lambda_complete_multipartite(sizes);
    for (std::size_t i = 0; i < sizes.size(); ++i) c.params += (i ? "," : "") + std::to_string(sizes[i]);
    c.ring.graph = graphs::complete_multipartite(sizes);
    c.ring.parts = parts_from_annotations(c.ring.graph);
    std::vector<int> f(sizes.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = 2 * static_cast<int>(i);
    c.labelling = lift_labelling(c.ring.graph, c.ring.parts, Labelling(f));
    c.order = "lift";
    c.violations = validate(c.ring.graph, c.labelling);
    return c;
}

// ---------------------------------------------------------------------------
// discrepancy report

struct Discrepancy {
    std::string kind;  // span_below_formula | formula_below_lower_bound | exact_disagrees | construction_exceeds_formula
    std::string family;
    std::string params;
    long long formula = 0;
    long long observed = 0;
    bool certified = false;  // backed by a validated witness or a proven bound
    std::string detail;
};

/// Entries explaining why a construction's span differs from its formula.
///
/// A validated labelling below the formula certifies that the formula overstates
/// lambda; a formula below D+1 certifies that it understates it. A construction
/// above the formula with neither is listed uncertified.
inline std::vector<Discrepancy> discrepancies(const Construction& c, std::optional<LambdaReport> exact = std::nullopt) {
    std::vector<Discrepancy> out;
    auto add = [&](std::string kind, long long obs, bool cert, std::string why) {
        out.push_back({std::move(kind), c.family, c.params, c.formula, obs, cert, std::move(why)});
    };
    if (!c.valid()) return out;
    const long long span = c.span();
    const long long degree_bound = c.ring.graph.max_degree() > 0 ? static_cast<long long>(c.ring.graph.max_degree()) + 1 : 0;
    if (span < c.formula) add("span_below_formula", span, true, "validated labelling with smaller span");
    if (c.formula < degree_bound)
        add("formula_below_lower_bound", degree_bound, true, "lambda >= max degree + 1 = " + std::to_string(degree_bound));
    if (exact && exact->optimal && exact->lambda != c.formula)
        add("exact_disagrees", exact->lambda, true, "exact solver optimum");
    const bool certified = std::any_of(out.begin(), out.end(), [](const Discrepancy& d) { return d.certified; });
    if (span > c.formula && !certified)
        add("construction_exceeds_formula", span, false, "construction span above formula, formula not refuted");
    return out;
}

/// Agreement for the property acceptance: a valid labelling whose span equals the
/// formula, or a certified entry explaining the difference.
inline bool construction_accepted(const Construction& c, const std::vector<Discrepancy>& report) {
    if (!c.valid()) return false;
    if (c.span() == c.formula) return true;
    return std::any_of(report.begin(), report.end(), [](const Discrepancy& d) { return d.certified; });
}

}  // namespace zdl
