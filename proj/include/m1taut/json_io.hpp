#pragma once

#include <json.hpp>

#include "m1taut/sl2.hpp"
#include "m1taut/sn_module.hpp"
#include "m1taut/stable_graph.hpp"
#include "m1taut/strata.hpp"

namespace m1taut {

// Graph schema (vertex-pair form):
//   {"vertices":[{"genus":0},{"genus":1}],
//    "legs":[{"label":1,"vertex":0}],
//    "edges":[[0,1],[0,0]]}
// Edges list unordered vertex pairs, repeated for parallels, [v,v] for loops.
nlohmann::json graph_to_json(const StableGraph& g);

// Lossless half-edge interchange form:
//   {"vertices":[...],
//    "halfedges":[{"vertex":0},...],
//    "legs":[{"label":1,"halfedge":0}],
//    "edges":[[1,2],...]}    (pairs of half-edge ids)
nlohmann::json graph_to_json_halfedges(const StableGraph& g);

// Accepts either form (detected by the presence of "halfedges").
StableGraph graph_from_json(const nlohmann::json& j);

// {"n":4,"codim":2,"terms":[{"graph":...,"coeff":"-1/2"}]}
nlohmann::json strata_vector_to_json(const StrataVector& v);
StrataVector strata_vector_from_json(const nlohmann::json& j);

// {"sl2":[{"k":2,"twist":1,"mult":3}]}
nlohmann::json sl2_to_json(const SL2Rep& r);
SL2Rep sl2_from_json(const nlohmann::json& j);

// {"sn":{"n":5,"summands":[{"lambda":[4,1],"mult":1}]}}
nlohmann::json sn_to_json(const SnModule& m);
SnModule sn_from_json(const nlohmann::json& j);

}  // namespace m1taut
