#pragma once

#include <string>

#include <json.hpp>

#include "pigraph/edge_ideal.hpp"
#include "pigraph/monomial.hpp"
#include "pigraph/polymatroid.hpp"
#include "pigraph/split_graph.hpp"

namespace pigraph {

// {a, b, vertices, part_A, part_B, edges} with vertices as label strings
// and edges as label pairs.
nlohmann::json graph_json(const split_graph& g);

// One "label: neighbor neighbor ..." line per vertex.
std::string graph_adjacency_text(const split_graph& g);

// Array of canonical monomial strings in descending graded reverse lex order.
nlohmann::json ideal_json(const monomial_ideal& ideal);

nlohmann::json decomposition_json(const primary_decomposition& dec);

// {order, r, betti: [{i, shift, beta}], reg, polymatroidal}. Counts are
// serialized as decimal strings so arbitrarily large values survive a
// parse/re-serialize round trip exactly.
nlohmann::json certificate_json(const linear_quotients_certificate& cert,
                                int gen_degree, bool polymatroidal);

} // namespace pigraph
