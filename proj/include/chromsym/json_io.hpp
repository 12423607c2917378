#pragma once

#include <string>

#include <json.hpp>

#include "chromsym/graph.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/symfunc.hpp"
#include "chromsym/verify.hpp"

namespace chromsym {

using json = nlohmann::json;

inline json partition_to_json(const Partition& p) {
    return json(p.parts());
}

inline Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
}

// {"degree": N, "basis": "e", "terms": [{"partition":[...],"coeff":"p/q"}...]}
// with terms in canonical partition order; coefficients are strings so no
// precision is lost.
inline json symfunc_to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.terms())
        terms.push_back({{"partition", partition_to_json(p)},
                         {"coeff", rational_to_string(c)}});
    return json{{"degree", f.degree()},
                {"basis", std::string(1, basis_letter(f.basis()))},
                {"terms", terms}};
}

inline SymFunc symfunc_from_json(const json& j) {
    std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1) throw std::invalid_argument("basis must be one letter");
    SymFunc f(j.at("degree").get<int>(), basis_from_letter(b[0]));
    for (const auto& t : j.at("terms"))
        f.add_term(partition_from_json(t.at("partition")),
                   rational_from_string(t.at("coeff").get<std::string>()));
    return f;
}

// {"vertices": n, "edges": [[u,v], ...]}; duplicate or looped edges are
// rejected with an error naming the offending pair.
inline Graph graph_from_json(const json& j) {
    Graph g(j.at("vertices").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge must be a pair: " + e.dump());
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
    return json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

inline json report_to_json(const CheckReport& r) {
    return json{{"check", r.check},
                {"params", r.params},
                {"verdict", verdict_string(r.verdict)},
                {"witness", r.witness}};
}

}  // namespace chromsym
