#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "dnaprover/strand_graph.hpp"

namespace dnaprover {

/// {vertices:[{id,length,colour,domains}], admissible:[[[v,n],[v,n]]...],
///  toehold:[bool...], current:[[[v,n],[v,n]]...]}
nlohmann::json graph_to_json(const StrandGraph& g);

/// Throws ParseError on a malformed document and WellFormednessError when
/// the graph breaks its invariants.
StrandGraph graph_from_json(const nlohmann::json& j);

/// Compact serialization. parse_graph_json(dump_graph_json(g)) == g and
/// dump_graph_json(parse_graph_json(s)) == s for any s this function wrote.
std::string dump_graph_json(const StrandGraph& g);
StrandGraph parse_graph_json(std::string_view text);

nlohmann::json edge_to_json(const Edge& e);
nlohmann::json trace_to_json(const Trace& t);

/// Graphviz rendering: current edges solid red, admissible-only edges blue,
/// toehold edges dashed; one node per site, clustered by vertex.
std::string graph_to_dot(const StrandGraph& g, std::string_view name = "G");

/// Paper-style listing of V, length, colour, A, toehold and E.
std::string describe_graph(const StrandGraph& g);

}  // namespace dnaprover
