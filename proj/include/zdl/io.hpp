#pragma once

// JSON and DOT serialisation for graphs, labellings, lambda reports and
// truncations.

#include <zdl/formulas.hpp>
#include <zdl/graph.hpp>
#include <zdl/l21.hpp>
#include <zdl/truncate.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace zdl {

using json = nlohmann::json;

inline json to_json(const Graph& g) {
    json j;
    j["ring"] = g.ring() ? json(*g.ring()) : json(nullptr);
    j["vertices"] = json::array();
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& info = g.info(v);
        j["vertices"].push_back({{"id", v}, {"label", info.label}, {"part", info.part ? json(*info.part) : json(nullptr)}});
    }
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

inline Graph graph_from_json(const json& j) {
    try {
        const auto& verts = j.at("vertices");
        const std::size_t n = verts.size();
        std::vector<VertexInfo> info(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& vj = verts[i];
            if (vj.at("id").get<std::size_t>() != i) throw ParseError("vertex ids must be 0..n-1 in order");
            info[i].label = vj.value("label", std::to_string(i));
            if (vj.contains("part") && !vj["part"].is_null()) info[i].part = vj["part"].get<int>();
        }
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair of vertex ids");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::optional<std::string> ring;
        if (j.contains("ring") && !j["ring"].is_null()) ring = j["ring"].get<std::string>();
        return Graph(n, edges).with_annotations(std::move(info), std::move(ring));
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

inline std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        os << "  " << v << " [label=\"" << g.info(v).label << "\"";
        if (g.info(v).part) os << ", part=" << *g.info(v).part;
        os << "];\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

inline json to_json(const Labelling& f) {
    return {{"graph_vertices", f.size()}, {"labels", f.labels()}, {"span", f.span()}};
}

inline Labelling labelling_from_json(const json& j) {
    try {
        auto labels = j.at("labels").get<std::vector<int>>();
        if (j.contains("graph_vertices") && j["graph_vertices"].get<std::size_t>() != labels.size())
            throw ParseError("labelling: graph_vertices does not match label count");
        for (int l : labels)
            if (l < 0) throw ParseError("labelling: labels must be non-negative");
        return Labelling(std::move(labels));
    } catch (const json::exception& e) {
        throw ParseError(std::string("labelling JSON: ") + e.what());
    }
}

inline json to_json(const BoundLedger& led) {
    json j = json::array();
    for (const auto& b : led.bounds) j.push_back({{"name", b.name}, {"value", b.value}, {"kind", b.lower ? "lower" : "upper"}});
    return {{"bounds", j}, {"refused", led.refused}};
}

inline json to_json(const LambdaReport& r) {
    json j{{"lambda", r.lambda}, {"method", to_string(r.method)}, {"optimal", r.optimal}, {"lower", r.lower},
           {"ledger", to_json(r.ledger)}};
    j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    if (r.nodes) j["nodes"] = r.nodes;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json to_json(const TruncationResult& t) {
    json j = to_json(t.truncated);
    j["class_of"] = t.class_of;
    j["sizes"] = t.sizes;
    return j;
}

inline json to_json(const HoleReport& h) {
    return {{"holes", h.holes}, {"multiplicities", h.multiplicities}, {"gaps", h.gaps},
            {"hole_count", h.hole_count()}, {"gap_count", h.gap_count()}};
}

inline json to_json(const Discrepancy& d) {
    return {{"kind", d.kind}, {"family", d.family}, {"params", d.params}, {"formula", d.formula},
            {"observed", d.observed}, {"certified", d.certified}, {"detail", d.detail}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace zdl
