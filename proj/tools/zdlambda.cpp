// zdlambda: build zero-divisor graphs, compute and verify L(2,1) lambda numbers,
// truncate partite graphs and reproduce the family tables.
//
// Exit codes: 0 ok, 1 verification or agreement failure, 2 usage error,
// 3 cap or budget refusal.

#include <zdl/zdl.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace zdl;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_refused = 3;

struct Config {
    std::size_t max_vertices = default_solver_cap;
    long long time_budget_ms = 0;
    std::string format = "json";
    std::uint64_t seed = 1;

    SolverOptions solver() const {
        SolverOptions o;
        o.max_vertices = max_vertices;
        o.time_budget = std::chrono::milliseconds(time_budget_ms);
        return o;
    }
};

struct Input {
    std::string ring;
    std::string graph_file;
    bool beck = false;
};

struct Loaded {
    Graph graph;
    PartiteStructure parts;
    std::optional<RingSpec> spec;
};

Loaded load(const Input& in) {
    if (in.ring.empty() == in.graph_file.empty()) throw InvalidArgument("give exactly one of --ring or --graph");
    if (!in.ring.empty()) {
        auto spec = parse_ring_spec(in.ring);
        auto rg = in.beck ? gamma_beck(spec) : gamma(spec);
        return {std::move(rg.graph), std::move(rg.parts), spec};
    }
    Graph g = graph_from_json(read_json_file(in.graph_file));
    auto parts = parts_from_annotations(g);
    return {std::move(g), std::move(parts), std::nullopt};
}

void emit(const json& j, const Config& cfg) {
    if (cfg.format == "human") {
        for (auto it = j.begin(); it != j.end(); ++it) std::cout << it.key() << ": " << it.value().dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

void add_input(CLI::App* cmd, Input& in, bool allow_beck = true) {
    cmd->add_option("--ring", in.ring, "ring spec, e.g. Z8 or F5xZ27");
    cmd->add_option("--graph", in.graph_file, "graph JSON file");
    if (allow_beck) cmd->add_flag("--beck", in.beck, "use Beck's graph (all elements) instead of Gamma");
}

// ---------------------------------------------------------------------------
// family recognition for formula / construct

struct Family {
    std::string name;
    long long p = 0, q = 0;
    int n = 0, m = 0;
    std::vector<int> sizes;
};

std::optional<Family> recognise(const RingSpec& spec) {
    const auto& f = spec.factors();
    using K = Factor::Kind;
    auto nonreduced = [](const Factor& x) { return x.kind == K::LocalZ && x.exponent >= 2; };
    if (f.size() == 1 && nonreduced(f[0])) return Family{"zpn", static_cast<long long>(f[0].prime), 0, f[0].exponent, 0, {}};
    if (f.size() == 2 && nonreduced(f[0]) && nonreduced(f[1]))
        return Family{"zpn-zqm", static_cast<long long>(f[0].prime), static_cast<long long>(f[1].prime), f[0].exponent, f[1].exponent, {}};
    if (f.size() == 2 && f[0].is_field_like() && nonreduced(f[1]))
        return Family{"fq-zpn", static_cast<long long>(f[1].prime), static_cast<long long>(f[0].order()), f[1].exponent, 0, {}};
    if (f.size() == 2 && spec.is_reduced())
        return Family{"multipartite", 0, 0, 0, 0, {static_cast<int>(f[0].order() - 1), static_cast<int>(f[1].order() - 1)}};
    return std::nullopt;
}

Construction construct_family(const Family& fam) {
    if (fam.name == "zpn") return construct_zpn(fam.p, fam.n);
    if (fam.name == "zpn-zqm") return construct_zpn_zqm(fam.p, fam.n, fam.q, fam.m);
    if (fam.name == "fq-zpn") return construct_fq_zpn(fam.q, fam.p, fam.n);
    return construct_multipartite(fam.sizes);
}

long long formula_family(const Family& fam) {
    if (fam.name == "zpn") return lambda_zpn(fam.p, fam.n);
    if (fam.name == "zpn-zqm") return lambda_zpn_zqm(fam.p, fam.n, fam.q, fam.m);
    if (fam.name == "fq-zpn") return lambda_fq_zpn(fam.q, fam.p, fam.n).value;
    return lambda_complete_multipartite(fam.sizes);
}

// ---------------------------------------------------------------------------
// commands

int cmd_build(const Input& in, bool dot, const std::string& out, const Config& cfg) {
    auto l = load(in);
    std::string text = (dot || cfg.format == "dot") ? to_dot(l.graph) : to_json(l.graph).dump(2) + "\n";
    if (out.empty()) std::cout << text;
    else std::ofstream(out) << text;
    return exit_ok;
}

int cmd_lambda(const Input& in, const std::string& method, const Config& cfg) {
    auto l = load(in);
    LambdaReport rep;
    if (method == "exact") {
        rep = lambda_exact(l.graph, cfg.solver());
    } else if (method == "path-cover") {
        rep = lambda_via_path_cover(l.graph);
    } else if (method == "lift") {
        if (!l.parts.uniform_patterns) throw NotApplicable("partite structure is non-uniform; lift is not offered");
        auto r = lift(l.graph, l.parts, cfg.solver());
        rep.method = Method::Lift;
        rep.lambda = r.lambda;
        rep.witness = r.labelling;
        rep.optimal = false;
        rep.note = "truncation lambda " + std::to_string(r.truncation_lambda.lambda) + ", diameter " +
                   std::to_string(r.diameter) + ", representatives " + std::to_string(r.representatives.classes.size());
        if (!validate(l.graph, r.labelling).empty()) rep.note += "; lifted labelling fails validation";
    } else if (method == "formula" || method == "construct") {
        if (!l.spec) throw NotApplicable("formula and construct need --ring");
        if (in.beck) {
            const auto& f = l.spec->factors();
            if (f.size() != 1 || f[0].kind == Factor::Kind::LocalZ && f[0].exponent > 1)
                throw NotApplicable("Beck formula available only for fields here; use --method exact");
            if (method == "construct") throw NotApplicable("no Beck construction; use --method exact");
            rep.method = Method::Formula;
            rep.lambda = static_cast<int>(lambda_beck_field(static_cast<long long>(f[0].order())));
        } else {
            auto fam = recognise(*l.spec);
            if (!fam) throw NotApplicable("ring " + l.spec->to_string() + " is not in a family with a closed form");
            if (method == "formula") {
                rep.method = Method::Formula;
                rep.lambda = static_cast<int>(formula_family(*fam));
            } else {
                auto c = construct_family(*fam);
                rep.method = Method::Construction;
                rep.lambda = c.span();
                rep.witness = c.labelling;
                rep.note = "formula " + std::to_string(c.formula) + ", order " + c.order +
                           (c.valid() ? ", valid" : ", INVALID");
                json j = to_json(rep);
                j["discrepancies"] = json::array();
                for (const auto& d : discrepancies(c)) j["discrepancies"].push_back(to_json(d));
                emit(j, cfg);
                return c.valid() ? exit_ok : exit_fail;
            }
        }
    } else {
        throw InvalidArgument("unknown method " + method);
    }
    emit(to_json(rep), cfg);
    if (method == "exact" && !rep.optimal) return exit_refused;
    return exit_ok;
}

int cmd_verify(const std::string& graph_file, const std::string& lab_file, const Config& cfg) {
    Graph g = graph_from_json(read_json_file(graph_file));
    Labelling f = labelling_from_json(read_json_file(lab_file));
    auto v = validate(g, f);
    json j{{"valid", v.empty()}, {"span", f.span()}, {"violations", json::array()}};
    for (const auto& x : v) j["violations"].push_back(x.describe(f));
    emit(j, cfg);
    return v.empty() ? exit_ok : exit_fail;
}

int cmd_truncate(const Input& in, bool require_uniform, const Config& cfg) {
    auto l = load(in);
    bool uniform = check_uniform_bipartite(l.graph, l.parts);
    auto t = partite_truncation(l.graph, l.parts);
    json j = to_json(t);
    j["uniform_bipartite"] = uniform;
    emit(j, cfg);
    return (require_uniform && !uniform) ? exit_fail : exit_ok;
}

int cmd_analyze(const Input& in, const std::string& lab_file, const Config& cfg) {
    auto l = load(in);
    const Graph& g = l.graph;
    json j;
    j["vertices"] = g.size();
    j["edges"] = g.edge_count();
    auto d = diameter(g);
    j["diameter"] = d ? json(*d) : json("infinite");
    j["max_degree"] = g.max_degree();
    json refused = json::array();
    auto exact_metric = [&](const char* name, auto fn) {
        try {
            j[name] = fn();
        } catch (const CapExceeded& e) {
            refused.push_back(e.what());
        }
    };
    exact_metric("clique_number", [&] { return clique_number(g); });
    exact_metric("independence_number", [&] { return independence_number(g); });
    exact_metric("chromatic_number", [&] { return chromatic_number(g); });
    j["ledger"] = to_json(classical_bounds(g));
    try {
        j["path_cover"] = to_json(lambda_via_path_cover(g));
    } catch (const CapExceeded& e) {
        refused.push_back(e.what());
    }
    j["refused"] = refused;
    if (!lab_file.empty()) {
        Labelling f = labelling_from_json(read_json_file(lab_file));
        auto v = validate(g, f);
        if (!v.empty()) {
            j["labelling_valid"] = false;
            emit(j, cfg);
            return exit_fail;
        }
        j["labelling_valid"] = true;
        j["holes"] = to_json(analyze(g, f));
    }
    emit(j, cfg);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// table

std::vector<long long> parse_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            if (auto dots = item.find(".."); dots != std::string::npos) {
                long long a = std::stoll(item.substr(0, dots)), b = std::stoll(item.substr(dots + 2));
                for (long long x = a; x <= b; ++x) out.push_back(x);
            } else {
                out.push_back(std::stoll(item));
            }
        } catch (const std::logic_error&) {
            throw ParseError("bad list item '" + item + "' in '" + text + "'");
        }
    }
    if (out.empty()) throw ParseError("empty list '" + text + "'");
    return out;
}

struct Row {
    std::string family, params;
    std::optional<long long> formula, span;
    std::string status;  // validator status
    std::optional<long long> exact;
    bool agree = true;
    std::string note;
};

void print_rows(const std::vector<Row>& rows, const Config& cfg) {
    auto opt = [](const std::optional<long long>& x) { return x ? std::to_string(*x) : std::string("-"); };
    if (cfg.format == "json") {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"family", r.family}, {"params", r.params}, {"formula", r.formula ? json(*r.formula) : json(nullptr)},
                         {"span", r.span ? json(*r.span) : json(nullptr)}, {"validator", r.status},
                         {"exact", r.exact ? json(*r.exact) : json(nullptr)}, {"agree", r.agree}, {"note", r.note}});
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "family\tparams\tformula\tspan\tvalidator\texact\tagree\tnote\n";
    for (const auto& r : rows)
        std::cout << r.family << '\t' << r.params << '\t' << opt(r.formula) << '\t' << opt(r.span) << '\t' << r.status << '\t'
                  << opt(r.exact) << '\t' << (r.agree ? "yes" : "no") << '\t' << r.note << '\n';
}

Row construction_row(const Construction& c, const Config& cfg, bool want_exact) {
    Row r{c.family, c.params, c.formula, c.span(), c.valid() ? "ok" : "violations", std::nullopt, true, ""};
    std::optional<LambdaReport> ex;
    if (want_exact && c.ring.graph.size() <= cfg.max_vertices) {
        ex = lambda_exact(c.ring.graph, cfg.solver());
        if (ex->optimal) r.exact = ex->lambda;
    }
    r.agree = c.valid() && c.span() == c.formula && (!r.exact || *r.exact == c.formula);
    for (const auto& d : discrepancies(c, ex)) r.note += (r.note.empty() ? "" : ";") + d.kind + (d.certified ? "" : "?");
    return r;
}

int cmd_table(const std::string& family, const std::map<std::string, std::string>& lists, bool exact, int count,
              const Config& cfg) {
    auto list = [&](const char* key, const char* fallback) { return parse_list(lists.at(key).empty() ? fallback : lists.at(key)); };
    std::vector<Row> rows;
    if (family == "zpn") {
        for (auto p : list("p", "2,3,5"))
            for (auto n : list("n", "2..4")) rows.push_back(construction_row(construct_zpn(p, static_cast<int>(n)), cfg, exact));
    } else if (family == "zpn-zqm") {
        for (auto p : list("p", "2,3"))
            for (auto n : list("n", "2,3"))
                for (auto q : list("q", "2,3"))
                    for (auto m : list("m", "2,3"))
                        rows.push_back(construction_row(construct_zpn_zqm(p, static_cast<int>(n), q, static_cast<int>(m)), cfg, exact));
    } else if (family == "fq-zpn") {
        for (auto q : list("q", "2,3,4,5"))
            for (auto p : list("p", "2,3"))
                for (auto n : list("n", "2,3"))
                    rows.push_back(construction_row(construct_fq_zpn(q, p, static_cast<int>(n)), cfg, exact));
    } else if (family == "multipartite") {
        auto bounds = list("sizes-upto", "3,3");
        std::vector<int> cur(bounds.size(), 1);
        while (true) {
            if (std::is_sorted(cur.begin(), cur.end())) rows.push_back(construction_row(construct_multipartite(cur), cfg, exact));
            std::size_t i = 0;
            while (i < cur.size() && ++cur[i] > bounds[i]) cur[i++] = 1;
            if (i == cur.size()) break;
        }
    } else if (family == "beck") {
        for (auto p : list("p", "2,3"))
            for (auto n : list("n", "2,3")) {
                auto spec = RingSpec({Factor::local(static_cast<std::uint64_t>(p), static_cast<int>(n))});
                auto g = gamma(spec), b = gamma_beck(spec);
                Row r{"beck", "p=" + std::to_string(p) + ",n=" + std::to_string(n), std::nullopt, std::nullopt, "-", std::nullopt, true, ""};
                auto d = diameter(g.graph);
                try {
                    r.formula = lambda_beck_from_gamma(lambda_zpn(p, static_cast<int>(n)), static_cast<long long>(spec.order()),
                                                       static_cast<long long>(g.graph.size()), d ? *d : 3);
                } catch (const NotApplicable& e) {
                    r.note = e.what();
                }
                if (b.graph.size() <= cfg.max_vertices) {
                    auto ex = lambda_exact(b.graph, cfg.solver());
                    if (ex.optimal) r.exact = ex.lambda;
                }
                r.agree = r.formula && r.exact && *r.formula == *r.exact;
                rows.push_back(r);
            }
    } else if (family == "shift") {
        std::mt19937_64 rng(cfg.seed);
        auto ms = list("m", "0..3");
        for (int made = 0, tries = 0; made < count && tries < 100000; ++tries) {
            std::uniform_int_distribution<int> nd(3, 8);
            Graph g = graphs::random(static_cast<std::size_t>(nd(rng)), 0.5, rng);
            auto d = diameter(g);
            if (!d || *d != 2) continue;
            ++made;
            int k = lambda_exact(g, cfg.solver()).lambda;
            for (auto m : ms) {
                Graph h = add_isolated_and_dominating(g, static_cast<std::size_t>(m));
                Row r{"shift", "graph=" + std::to_string(made) + ",n=" + std::to_string(g.size()) + ",m=" + std::to_string(m),
                      lambda_add_dominating(k, m, *d), std::nullopt, "-", std::nullopt, true, ""};
                auto ex = lambda_exact(h, cfg.solver());
                if (ex.optimal) r.exact = ex.lambda;
                r.agree = r.exact && *r.exact == *r.formula;
                rows.push_back(r);
            }
        }
    } else {
        throw InvalidArgument("unknown family " + family);
    }
    print_rows(rows, cfg);
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.agree; }) ? exit_ok : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-divisor graphs and L(2,1) lambda numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--max-vertices", cfg.max_vertices, "vertex cap for the exact solver")->check(CLI::PositiveNumber);
    app.add_option("--time-budget-ms", cfg.time_budget_ms, "time budget per exact solve (0 = none)")->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "tsv", "human"}));
    app.add_option("--seed", cfg.seed, "seed for random test graphs");

    Input in;
    bool dot = false;
    std::string out, method = "exact", labelling_file, family;
    bool require_uniform = false, exact = false;
    int count = 30;
    std::map<std::string, std::string> lists{{"p", ""}, {"n", ""}, {"q", ""}, {"m", ""}, {"sizes-upto", ""}};

    auto* build = app.add_subcommand("build", "write Gamma(R) or Beck's graph as JSON or DOT");
    add_input(build, in);
    build->add_flag("--dot", dot, "DOT instead of JSON");
    build->add_option("-o,--output", out, "output file (default stdout)");

    auto* lam = app.add_subcommand("lambda", "lambda number by one method");
    add_input(lam, in);
    lam->add_option("--method", method, "exact | formula | construct | path-cover | lift")
        ->check(CLI::IsMember({"exact", "formula", "construct", "path-cover", "lift"}));

    auto* verify = app.add_subcommand("verify", "check a labelling against a graph");
    std::string graph_file;
    verify->add_option("--graph", graph_file, "graph JSON")->required();
    verify->add_option("--labelling", labelling_file, "labelling JSON")->required();

    auto* trunc = app.add_subcommand("truncate", "contract partite classes");
    add_input(trunc, in, false);
    trunc->add_flag("--require-uniform", require_uniform, "fail unless class pairs are complete or empty");

    auto* an = app.add_subcommand("analyze", "invariants, bound ledger, holes of a labelling");
    add_input(an, in);
    an->add_option("--labelling", labelling_file, "labelling JSON");

    auto* table = app.add_subcommand("table", "formula / construction / exact table as TSV");
    table->add_option("--family", family, "zpn | zpn-zqm | fq-zpn | multipartite | beck | shift")->required();
    for (auto& [key, value] : lists) table->add_option("--" + key, value, "list such as 2,3,5 or 2..4");
    table->add_flag("--exact", exact, "also run the exact solver where the graph fits");
    table->add_option("--count", count, "number of random graphs for the shift family");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*build) return cmd_build(in, dot, out, cfg);
        if (*lam) return cmd_lambda(in, method, cfg);
        if (*verify) return cmd_verify(graph_file, labelling_file, cfg);
        if (*trunc) return cmd_truncate(in, require_uniform, cfg);
        if (*an) return cmd_analyze(in, labelling_file, cfg);
        if (*table) {
            if (cfg.format == "json" && !app.get_option("--format")->count()) cfg.format = "tsv";
            return cmd_table(family, lists, exact, count, cfg);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_refused;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
