#include "pigraph/json_io.hpp"

#include <sstream>

namespace pigraph {

using nlohmann::json;

json graph_json(const split_graph& g) {
    json out;
    out["a"] = g.a;
    out["b"] = g.b;
    out["vertices"] = json::array();
    for (const std::string& l : g.labels) out["vertices"].push_back(l);
    out["part_A"] = json::array();
    for (int v = 0; v < g.a; ++v) out["part_A"].push_back(g.labels[v]);
    out["part_B"] = json::array();
    for (int v = g.a; v < g.vertex_count(); ++v) out["part_B"].push_back(g.labels[v]);
    out["edges"] = json::array();
    for (const auto& [u, v] : g.edges)
        out["edges"].push_back(json::array({g.labels[u], g.labels[v]}));
    return out;
}

std::string graph_adjacency_text(const split_graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << g.labels[v] << ':';
        for (int w : adj[v]) out << ' ' << g.labels[w];
        out << '\n';
    }
    return out.str();
}

json ideal_json(const monomial_ideal& ideal) {
    json out = json::array();
    for (const monomial& m : ideal.generators()) out.push_back(to_string(m));
    return out;
}

json decomposition_json(const primary_decomposition& dec) {
    json out = json::array();
    for (const prime_component& c : dec.components) {
        json vars = json::array();
        for (const std::string& v : c.labels()) vars.push_back(v);
        out.push_back(std::move(vars));
    }
    return out;
}

json certificate_json(const linear_quotients_certificate& cert, int gen_degree,
                      bool polymatroidal) {
    json out;
    out["order"] = json::array();
    for (const monomial& m : cert.order) out["order"].push_back(to_string(m));
    out["r"] = cert.colon_variable_counts;
    out["betti"] = json::array();
    for (const betti_entry& e : betti_from_certificate(cert, gen_degree)) {
        json entry;
        entry["i"] = e.i;
        entry["shift"] = e.shift;
        entry["beta"] = to_string(e.beta);
        out["betti"].push_back(std::move(entry));
    }
    out["reg"] = gen_degree;
    out["polymatroidal"] = polymatroidal;
    return out;
}

} // namespace pigraph
