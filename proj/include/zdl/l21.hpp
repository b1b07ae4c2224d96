#pragma once

// L(2,1)-labellings: validation, hole analysis, first-fit upper bounds, the
// classical bound ledger, an exact branch-and-bound solver, exhaustive
// enumeration of labellings, and the path-cover oracle.

#include <zdl/graph.hpp>

#include <algorithm>
#include <bitset>
#include <chrono>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zdl {

// ---------------------------------------------------------------------------
// labellings

/// Total vertex -> label map with the minimum label shifted to 0.
class Labelling {
public:
    Labelling() = default;

    explicit Labelling(std::vector<int> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) return;
        int lo = *std::min_element(labels_.begin(), labels_.end());
        for (int& l : labels_) l -= lo;
    }

    std::size_t size() const noexcept { return labels_.size(); }
    int operator[](std::size_t v) const { return labels_.at(v); }
    const std::vector<int>& labels() const noexcept { return labels_; }
    int span() const { return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()); }

    bool operator==(const Labelling&) const = default;

private:
    std::vector<int> labels_;
};

/// u, v (u < v) at distance exactly two.
inline BitMatrix distance_two(const Graph& g) {
    const std::size_t n = g.size();
    BitMatrix d2(n);
    const auto& adj = g.matrix();
    for (std::size_t v = 0; v < n; ++v) {
        auto row = d2.row(v);
        adj.for_each_in_row(v, [&](std::size_t u) {
            auto nb = adj.row(u);
            for (std::size_t w = 0; w < row.size(); ++w) row[w] |= nb[w];
        });
        auto own = adj.row(v);
        for (std::size_t w = 0; w < row.size(); ++w) row[w] &= ~own[w];
        d2.reset(v, v);
    }
    return d2;
}

struct Violation {
    enum class Rule { Adjacent, DistanceTwo };
    int u = 0;
    int v = 0;
    Rule rule = Rule::Adjacent;

    std::string describe(const Labelling& f) const {
        if (rule == Rule::Adjacent)
            return "adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) + " have labels " +
                   std::to_string(f[u]) + " and " + std::to_string(f[v]) + " (need difference >= 2)";
        return "vertices " + std::to_string(u) + " and " + std::to_string(v) + " at distance 2 share label " +
               std::to_string(f[u]);
    }
};

/// Empty iff f is an L(2,1)-labelling of g.
inline std::vector<Violation> validate(const Graph& g, const Labelling& f, const BitMatrix* d2_cache = nullptr) {
    if (f.size() != g.size())
        throw InvalidArgument("labelling has " + std::to_string(f.size()) + " labels for " + std::to_string(g.size()) +
                              " vertices");
    BitMatrix local;
    if (!d2_cache) {
        local = distance_two(g);
        d2_cache = &local;
    }
    std::vector<Violation> out;
    for (std::size_t u = 0; u < g.size(); ++u) {
        g.matrix().for_each_in_row(u, [&](std::size_t v) {
            if (u < v && std::abs(f[u] - f[v]) < 2)
                out.push_back({static_cast<int>(u), static_cast<int>(v), Violation::Rule::Adjacent});
        });
        d2_cache->for_each_in_row(u, [&](std::size_t v) {
            if (u < v && f[u] == f[v])
                out.push_back({static_cast<int>(u), static_cast<int>(v), Violation::Rule::DistanceTwo});
        });
    }
    return out;
}

inline bool is_valid(const Graph& g, const Labelling& f) { return validate(g, f).empty(); }

struct HoleReport {
    std::vector<int> holes;
    std::vector<int> multiplicities;
    std::vector<int> gaps;

    std::size_t hole_count() const noexcept { return holes.size(); }
    std::size_t gap_count() const noexcept { return gaps.size(); }
};

/// Holes, multiplicities and gaps of a valid labelling.
inline HoleReport analyze(const Graph& g, const Labelling& f) {
    if (!validate(g, f).empty()) throw InvalidArgument("analyze needs a valid L(2,1)-labelling");
    const int span = f.span();
    std::vector<std::vector<int>> by_label(static_cast<std::size_t>(span) + 1);
    for (std::size_t v = 0; v < f.size(); ++v) by_label[f[v]].push_back(static_cast<int>(v));
    HoleReport r;
    for (int h = 1; h < span; ++h) {
        const auto& at = by_label[h];
        if (at.size() >= 2) r.multiplicities.push_back(h);
        if (!at.empty()) continue;
        r.holes.push_back(h);
        const auto& lo = by_label[h - 1];
        const auto& hi = by_label[h + 1];
        if (lo.size() == 1 && hi.size() == 1 && g.adjacent(lo[0], hi[0])) r.gaps.push_back(h);
    }
    return r;
}

// ---------------------------------------------------------------------------
// first fit

/// First-fit along `order`: each vertex gets the smallest label compatible with the
/// vertices already labelled. Vertices missing from `order` are labelled last in
/// index order.
inline Labelling greedy_upper(const Graph& g, const std::vector<int>& order, const BitMatrix* d2_cache = nullptr) {
    const std::size_t n = g.size();
    BitMatrix local;
    if (!d2_cache) {
        local = distance_two(g);
        d2_cache = &local;
    }
    std::vector<int> label(n, -1);
    std::vector<int> seq;
    seq.reserve(n);
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidArgument("order names vertex out of range");
        if (!seen[v]) seq.push_back(v);
        seen[v] = 1;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) seq.push_back(static_cast<int>(v));

    std::vector<char> forbidden;
    for (int v : seq) {
        forbidden.assign(3 * n + 3, 0);
        g.matrix().for_each_in_row(v, [&](std::size_t u) {
            if (int l = label[u]; l >= 0) {
                if (l > 0) forbidden[l - 1] = 1;
                forbidden[l] = forbidden[l + 1] = 1;
            }
        });
        d2_cache->for_each_in_row(v, [&](std::size_t u) {
            if (int l = label[u]; l >= 0) forbidden[l] = 1;
        });
        int l = 0;
        while (forbidden[l]) ++l;
        label[v] = l;
    }
    return Labelling(std::move(label));
}

/// Vertex ids by descending degree, ties by index.
inline std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// ---------------------------------------------------------------------------
// bound ledger

struct Bound {
    std::string name;
    int value = 0;
    bool lower = false;
};

struct BoundLedger {
    std::vector<Bound> bounds;
    std::vector<std::string> refused;  // bounds omitted because an exact routine hit its cap

    std::optional<int> get(const std::string& name) const {
        for (const auto& b : bounds)
            if (b.name == name) return b.value;
        return std::nullopt;
    }
    int best_lower() const {
        int lo = 0;
        for (const auto& b : bounds)
            if (b.lower) lo = std::max(lo, b.value);
        return lo;
    }
    std::optional<int> best_upper() const {
        std::optional<int> hi;
        for (const auto& b : bounds)
            if (!b.lower) hi = hi ? std::min(*hi, b.value) : b.value;
        return hi;
    }
};

struct BoundCaps {
    std::size_t clique = default_clique_cap;
    std::size_t chromatic = default_chromatic_cap;
};

/// Clique lower bound 2w-2, degree lower bound D+1 (when there is an edge), and
/// the upper bounds n+chi-2, D^2+2D and 2n-alpha-1. A bound whose exact
/// subroutine refuses is listed under `refused`.
inline BoundLedger classical_bounds(const Graph& g, BoundCaps caps = {}) {
    BoundLedger led;
    const int n = static_cast<int>(g.size());
    const int delta = static_cast<int>(g.max_degree());
    if (n == 0) return led;
    try {
        int w = clique_number(g, caps.clique);
        led.bounds.push_back({"2w-2", 2 * w - 2, true});
    } catch (const CapExceeded& e) {
        led.refused.emplace_back(e.what());
    }
    if (delta > 0) led.bounds.push_back({"D+1", delta + 1, true});
    try {
        int chi = chromatic_number(g, caps.chromatic);
        led.bounds.push_back({"n+chi-2", n + chi - 2, false});
    } catch (const CapExceeded& e) {
        led.refused.emplace_back(e.what());
    }
    led.bounds.push_back({"D^2+2D", delta * delta + 2 * delta, false});
    try {
        int a = independence_number(g, caps.clique);
        led.bounds.push_back({"2n-alpha-1", 2 * n - a - 1, false});
    } catch (const CapExceeded& e) {
        led.refused.emplace_back(e.what());
    }
    return led;
}

// ---------------------------------------------------------------------------
// exact search

inline constexpr std::size_t default_solver_cap = 24;

struct SolverOptions {
    std::size_t max_vertices = default_solver_cap;
    std::chrono::milliseconds time_budget{0};  // 0 = unlimited
    std::uint64_t node_budget = 0;             // 0 = unlimited
    bool lexmin_witness = true;
};

enum class Method { Exact, PathCover, Formula, Construction, Lift };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::PathCover: return "path-cover";
        case Method::Formula: return "formula";
        case Method::Construction: return "construction";
        case Method::Lift: return "lift";
    }
    return "?";
}

struct LambdaReport {
    int lambda = 0;
    std::optional<Labelling> witness;
    Method method = Method::Exact;
    bool optimal = false;
    int lower = 0;  // proven lower bound; equals lambda when optimal
    BoundLedger ledger;
    std::uint64_t nodes = 0;
    std::string note;
};

namespace detail {

inline constexpr int max_label = 511;
using LabelSet = std::bitset<max_label + 1>;

/// Forward-checking search for a labelling with every label in [0, K].
class Search {
public:
    enum class Status { Found, Infeasible, Budget };

    Search(const Graph& g, const BitMatrix& d2, const SolverOptions& opts,
           std::chrono::steady_clock::time_point deadline)
        : n_(g.size()), opts_(opts), deadline_(deadline) {
        adj_.resize(n_);
        d2_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            adj_[v] = g.neighbors(v);
            d2.for_each_in_row(v, [&](std::size_t u) { d2_[v].push_back(static_cast<int>(u)); });
        }
        build_groups(g, d2);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

    /// `fixed[v] >= 0` pins v. `symmetry` restricts the first branching vertex to
    /// the lower half of [0, K] (valid when nothing is pinned).
    Status run(int K, const std::vector<int>& fixed, bool symmetry, std::vector<int>& out) {
        K_ = K;
        std::vector<LabelSet> dom(n_);
        LabelSet full;
        for (int l = 0; l <= K; ++l) full.set(l);
        for (auto& d : dom) d = full;
        std::vector<int> label(n_, -1);
        for (std::size_t v = 0; v < n_; ++v) {
            if (fixed.empty() || fixed[v] < 0) continue;
            if (!dom[v].test(fixed[v])) return Status::Infeasible;
            if (!assign(static_cast<int>(v), fixed[v], dom, label)) return Status::Infeasible;
        }
        symmetry_ = symmetry;
        budget_hit_ = false;
        bool ok = dfs(dom, label, 0);
        if (budget_hit_) return Status::Budget;
        if (!ok) return Status::Infeasible;
        out = label;
        return Status::Found;
    }

private:
    // Vertices pairwise within distance 2 need distinct labels. Each closed
    // neighbourhood is grown greedily to a maximal such group.
    void build_groups(const Graph& g, const BitMatrix& d2) {
        auto close = [&](std::size_t a, std::size_t b) { return g.adjacent(a, b) || d2.test(a, b); };
        std::set<std::vector<int>> seen;
        for (std::size_t v = 0; v < n_; ++v) {
            if (adj_[v].size() < 2) continue;
            std::vector<int> grp{static_cast<int>(v)};
            grp.insert(grp.end(), adj_[v].begin(), adj_[v].end());
            for (std::size_t u = 0; u < n_; ++u) {
                if (std::find(grp.begin(), grp.end(), static_cast<int>(u)) != grp.end()) continue;
                if (std::all_of(grp.begin(), grp.end(), [&](int w) { return close(u, w); })) grp.push_back(static_cast<int>(u));
            }
            std::sort(grp.begin(), grp.end());
            if (seen.insert(grp).second) groups_.push_back(std::move(grp));
        }
    }

    bool pigeonhole_ok(const std::vector<LabelSet>& dom, const std::vector<int>& label) const {
        for (const auto& grp : groups_) {
            LabelSet uni;
            std::size_t open = 0;
            for (int v : grp)
                if (label[v] < 0) {
                    uni |= dom[v];
                    ++open;
                }
            if (open > uni.count()) return false;
        }
        return true;
    }

    bool assign(int v, int l, std::vector<LabelSet>& dom, std::vector<int>& label) {
        label[v] = l;
        dom[v].reset();
        dom[v].set(l);
        for (int u : adj_[v]) {
            if (label[u] >= 0) continue;
            if (l > 0) dom[u].reset(l - 1);
            dom[u].reset(l);
            if (l < max_label) dom[u].reset(l + 1);
            if (dom[u].none()) return false;
        }
        for (int u : d2_[v]) {
            if (label[u] >= 0) continue;
            dom[u].reset(l);
            if (dom[u].none()) return false;
        }
        return true;
    }

    bool out_of_budget() {
        if (opts_.node_budget && nodes_ >= opts_.node_budget) return true;
        if (opts_.time_budget.count() > 0 && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
            return true;
        return false;
    }

    bool dfs(const std::vector<LabelSet>& dom, std::vector<int>& label, int depth) {
        ++nodes_;
        if (out_of_budget()) {
            budget_hit_ = true;
            return false;
        }
        // minimum remaining values, then larger degree, then smaller index
        int pick = -1;
        std::size_t best = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (label[v] >= 0) continue;
            std::size_t c = dom[v].count();
            if (pick < 0 || c < best || (c == best && adj_[v].size() > adj_[pick].size())) {
                pick = static_cast<int>(v);
                best = c;
            }
        }
        if (pick < 0) return true;
        int hi = K_;
        if (symmetry_ && depth == 0) hi = K_ / 2;
        for (int l = 0; l <= hi; ++l) {
            if (!dom[pick].test(l)) continue;
            std::vector<LabelSet> next = dom;
            std::vector<int> saved = label;
            if (assign(pick, l, next, label) && pigeonhole_ok(next, label) && dfs(next, label, depth + 1)) return true;
            label = std::move(saved);
            if (budget_hit_) return false;
        }
        return false;
    }

    std::size_t n_;
    SolverOptions opts_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> d2_;
    std::vector<std::vector<int>> groups_;
    int K_ = 0;
    bool symmetry_ = false;
    bool budget_hit_ = false;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact lambda by iterative deepening on the span K: each K from the best lower
/// bound upward is decided by forward-checking search with MRV branching. The
/// witness is the lexicographically smallest labelling at the optimum (vertex
/// order), unless the budget runs out during that pass.
inline LambdaReport lambda_exact(const Graph& g, const SolverOptions& opts = {}) {
    const std::size_t n = g.size();
    if (n > opts.max_vertices) throw CapExceeded("lambda_exact", static_cast<long long>(n), static_cast<long long>(opts.max_vertices));
    LambdaReport rep;
    rep.method = Method::Exact;
    rep.ledger = classical_bounds(g);
    if (n == 0) {
        rep.optimal = true;
        rep.witness = Labelling{};
        return rep;
    }
    const BitMatrix d2 = distance_two(g);
    Labelling greedy = greedy_upper(g, degree_order(g), &d2);
    rep.ledger.bounds.push_back({"first-fit", greedy.span(), false});

    int upper = greedy.span();
    if (auto ub = rep.ledger.best_upper()) upper = std::min(upper, *ub);
    int lower = rep.ledger.best_lower();
    if (upper > detail::max_label) throw CapExceeded("lambda_exact label range", upper, detail::max_label);

    const auto start = std::chrono::steady_clock::now();
    detail::Search search(g, d2, opts, start + opts.time_budget);
    std::vector<int> found;
    std::optional<Labelling> best = greedy.span() == upper ? std::optional<Labelling>(greedy) : std::nullopt;
    int K = lower;
    for (; K < upper; ++K) {
        auto st = search.run(K, {}, true, found);
        if (st == detail::Search::Status::Budget) {
            rep.nodes = search.nodes();
            rep.lambda = greedy.span();
            rep.lower = K;
            rep.witness = greedy;
            rep.optimal = false;
            rep.note = "budget exhausted; lambda is the best known upper bound";
            return rep;
        }
        if (st == detail::Search::Status::Found) {
            best = Labelling(found);
            break;
        }
    }
    if (!best) {
        // the optimum equals an upper bound without a witness in hand (only possible
        // when a formula bound beats first fit)
        auto st = search.run(K, {}, true, found);
        if (st != detail::Search::Status::Found) {
            rep.nodes = search.nodes();
            rep.lambda = greedy.span();
            rep.lower = K;
            rep.witness = greedy;
            rep.optimal = false;
            rep.note = "budget exhausted while building a witness";
            return rep;
        }
        best = Labelling(found);
    }
    rep.lambda = K;
    rep.lower = K;
    rep.optimal = true;

    if (opts.lexmin_witness) {
        std::vector<int> fixed(n, -1);
        std::vector<int> current = best->labels();
        bool complete = true;
        for (std::size_t v = 0; v < n && complete; ++v) {
            for (int l = 0; l < current[v]; ++l) {
                fixed[v] = l;
                auto st = search.run(K, fixed, false, found);
                if (st == detail::Search::Status::Budget) {
                    complete = false;
                    break;
                }
                if (st == detail::Search::Status::Found) {
                    current = found;
                    break;
                }
            }
            if (!complete) break;
            fixed[v] = current[v];
        }
        if (complete) best = Labelling(current);
        else rep.note = "budget exhausted during witness minimisation; witness is optimal but not lexicographically smallest";
    }
    rep.witness = best;
    rep.nodes = search.nodes();
    return rep;
}

/// Calls visit(labels) for every L(2,1)-labelling with all labels in [0, K]
/// (not normalised). Returns false when visit asked to stop.
inline bool for_each_labelling(const Graph& g, int K, const std::function<bool(const std::vector<int>&)>& visit) {
    const std::size_t n = g.size();
    const BitMatrix d2 = distance_two(g);
    std::vector<int> label(n, -1);
    std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
        if (v == n) return visit(label);
        for (int l = 0; l <= K; ++l) {
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) {
                if (g.adjacent(u, v) && std::abs(label[u] - l) < 2) ok = false;
                else if (d2.test(u, v) && label[u] == l) ok = false;
            }
            if (!ok) continue;
            label[v] = l;
            if (!rec(v + 1)) return false;
        }
        label[v] = -1;
        return true;
    };
    return rec(0);
}

/// Every labelling with min label 0 and span exactly K, in lexicographic order.
inline std::vector<Labelling> enumerate_span_labellings(const Graph& g, int K, std::size_t limit = 1'000'000) {
    std::vector<Labelling> out;
    for_each_labelling(g, K, [&](const std::vector<int>& lab) {
        auto [lo, hi] = std::minmax_element(lab.begin(), lab.end());
        if (*lo == 0 && *hi == K) out.emplace_back(lab);
        if (out.size() > limit) throw CapExceeded("enumerate_span_labellings", static_cast<long long>(out.size()), static_cast<long long>(limit));
        return true;
    });
    return out;
}

/// lambda = n + r - 2 with r = c(complement) when r >= 2; only lambda <= n - 1 when r = 1.
inline LambdaReport lambda_via_path_cover(const Graph& g, std::size_t cap = default_path_cover_cap) {
    LambdaReport rep;
    rep.method = Method::PathCover;
    const int n = static_cast<int>(g.size());
    const int r = path_cover_number(complement(g), cap);
    if (n == 0) {
        rep.optimal = true;
        return rep;
    }
    if (r >= 2) {
        rep.lambda = n + r - 2;
        rep.lower = rep.lambda;
        rep.optimal = true;
        rep.note = "c(complement) = " + std::to_string(r);
    } else {
        rep.lambda = n - 1;
        rep.optimal = false;
        rep.note = "c(complement) = 1; only lambda <= n - 1 follows";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// hole-structure lemmas

struct LemmaReading {
    std::string name;
    std::size_t labellings = 0;  // hole-minimal labellings examined
    std::size_t min_holes = 0;
    std::size_t hole_flank_failures = 0;  // some hole h with |f_{h-1}| != |f_{h+1}| or both empty
    std::size_t gap_failures = 0;         // |f_{h-1}| = |f_{h+1}| = 1 but h is not a gap
    std::size_t gap_multiplicity_failures = 0;  // G(f) and M(f) both nonempty

    bool flank_lemma_holds() const { return hole_flank_failures == 0 && gap_failures == 0; }
    bool gap_lemma_holds() const { return gap_multiplicity_failures == 0; }
    bool holds() const { return flank_lemma_holds() && gap_lemma_holds(); }
};

struct HoleLemmaReport {
    int lambda = 0;
    LemmaReading span_optimal;  // hole-minimal among labellings of span lambda
    LemmaReading all_spans;     // hole-minimal among all labellings
    bool some_reading_holds() const { return span_optimal.holds() || all_spans.holds(); }
};

inline constexpr std::size_t default_lemma_cap = 8;

namespace detail {

inline void tally_lemmas(const Graph& g, const Labelling& f, LemmaReading& r) {
    auto rep = analyze(g, f);
    std::vector<int> count(static_cast<std::size_t>(f.span()) + 1, 0);
    for (int l : f.labels()) ++count[l];
    bool flank = false, gap = false;
    for (int h : rep.holes) {
        int a = count[h - 1], b = count[h + 1];
        if (a != b || a == 0) flank = true;
        if (a == 1 && b == 1 && !std::binary_search(rep.gaps.begin(), rep.gaps.end(), h)) gap = true;
    }
    ++r.labellings;
    r.hole_flank_failures += flank;
    r.gap_failures += gap;
    r.gap_multiplicity_failures += (!rep.gaps.empty() && !rep.multiplicities.empty());
}

}  // namespace detail

/// Checks the hole lemmas under two readings of "minimal labelling": (a) fewest
/// holes among span-optimal labellings, (b) fewest holes among all labellings.
/// Every labelling with h holes has span <= n - 1 + h, so (b) is a finite search.
inline HoleLemmaReport hole_lemma_check(const Graph& g, std::size_t cap = default_lemma_cap) {
    const std::size_t n = g.size();
    if (n > cap) throw CapExceeded("hole_lemma_check", static_cast<long long>(n), static_cast<long long>(cap));
    HoleLemmaReport rep;
    rep.span_optimal.name = "span-optimal, fewest holes";
    rep.all_spans.name = "fewest holes over all labellings";
    if (n == 0) return rep;
    rep.lambda = lambda_exact(g, SolverOptions{.max_vertices = cap, .lexmin_witness = false}).lambda;

    auto holes_of = [](const std::vector<int>& lab, int span) {
        std::vector<char> used(static_cast<std::size_t>(span) + 1, 0);
        for (int l : lab) used[l] = 1;
        return static_cast<std::size_t>(std::count(used.begin(), used.end(), 0));
    };

    // (a)
    auto optimal = enumerate_span_labellings(g, rep.lambda);
    std::size_t ha = SIZE_MAX;
    for (const auto& f : optimal) ha = std::min(ha, holes_of(f.labels(), f.span()));
    rep.span_optimal.min_holes = ha;
    for (const auto& f : optimal)
        if (holes_of(f.labels(), f.span()) == ha) detail::tally_lemmas(g, f, rep.span_optimal);

    // (b): fewest holes overall is at most ha, so spans up to n - 1 + ha suffice
    const int top = static_cast<int>(n) - 1 + static_cast<int>(ha);
    std::size_t hb = ha;
    std::vector<Labelling> keep;
    for_each_labelling(g, top, [&](const std::vector<int>& lab) {
        auto [lo, hi] = std::minmax_element(lab.begin(), lab.end());
        if (*lo != 0) return true;
        std::size_t h = holes_of(lab, *hi);
        if (h < hb) {
            hb = h;
            keep.clear();
        }
        if (h == hb) keep.emplace_back(lab);
        return true;
    });
    rep.all_spans.min_holes = hb;
    for (const auto& f : keep) detail::tally_lemmas(g, f, rep.all_spans);
    return rep;
}

}  // namespace zdl
