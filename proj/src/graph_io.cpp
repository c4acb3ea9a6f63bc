#include "dnaprover/graph_io.hpp"

#include <sstream>

#include "dnaprover/error.hpp"

namespace dnaprover {

using nlohmann::json;

namespace {

json site_to_json(const Site& s) { return json::array({s.vertex, s.position}); }

Site site_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
    throw ParseError("site must be [vertex, position]");
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

Edge edge_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("edge must be [[v,n],[v,n]]");
  return Edge(site_from_json(j[0]), site_from_json(j[1]));
}

std::vector<Edge> edges_from_json(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw ParseError(std::string("missing array '") + field + "'");
  std::vector<Edge> out;
  for (const auto& e : j[field]) out.push_back(edge_from_json(e));
  return out;
}

Domain domain_from_token(const std::string& token) {
  // Reuse the process grammar for `name^*`.
  Process p = parse_process("<" + token + ">");
  if (p.strand_count() != 1 || p.strands()[0].size() != 1 || p.strands()[0][0].bond)
    throw ParseError("invalid domain '" + token + "'");
  return p.strands()[0][0].type();
}

}  // namespace

json edge_to_json(const Edge& e) {
  return json::array({site_to_json(e.first), site_to_json(e.second)});
}

json graph_to_json(const StrandGraph& g) {
  json vertices = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Vertex& vx = g.vertices()[v];
    json domains = json::array();
    for (const auto& d : vx.domains) domains.push_back(to_string(d));
    vertices.push_back(
        {{"id", v + 1}, {"length", vx.length}, {"colour", vx.colour}, {"domains", domains}});
  }
  json admissible = json::array();
  for (const auto& e : g.admissible()) admissible.push_back(edge_to_json(e));
  json toehold = json::array();
  for (bool t : g.toehold_flags()) toehold.push_back(t);
  json current = json::array();
  for (const auto& e : g.current()) current.push_back(edge_to_json(e));
  return {{"vertices", vertices},
          {"admissible", admissible},
          {"toehold", toehold},
          {"current", current}};
}

StrandGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graph document must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("missing array 'vertices'");
  std::vector<Vertex> vertices;
  for (const auto& jv : j["vertices"]) {
    if (!jv.is_object()) throw ParseError("vertex must be an object");
    const std::size_t id = jv.value("id", std::size_t{0});
    if (id != vertices.size() + 1) throw ParseError("vertex ids must be 1..N in order");
    Vertex v;
    v.length = jv.value("length", std::size_t{0});
    v.colour = jv.value("colour", std::size_t{0});
    if (!jv.contains("domains") || !jv["domains"].is_array())
      throw ParseError("vertex " + std::to_string(id) + " lacks 'domains'");
    for (const auto& d : jv["domains"]) {
      if (!d.is_string()) throw ParseError("domain names must be strings");
      v.domains.push_back(domain_from_token(d.get<std::string>()));
    }
    vertices.push_back(std::move(v));
  }
  std::vector<Edge> admissible = edges_from_json(j, "admissible");
  if (!j.contains("toehold") || !j["toehold"].is_array())
    throw ParseError("missing array 'toehold'");
  std::vector<bool> toehold;
  for (const auto& t : j["toehold"]) {
    if (!t.is_boolean()) throw ParseError("toehold flags must be booleans");
    toehold.push_back(t.get<bool>());
  }
  return StrandGraph(std::move(vertices), std::move(admissible), std::move(toehold),
                     edges_from_json(j, "current"));
}

std::string dump_graph_json(const StrandGraph& g) { return graph_to_json(g).dump(); }

StrandGraph parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  return graph_from_json(j);
}

json trace_to_json(const Trace& t) {
  auto edges = [](const std::vector<Edge>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(edge_to_json(e));
    return out;
  };
  json moves = json::array();
  std::size_t size = t.initial.size();
  for (const auto& m : t.moves) {
    size = size - m.removed.size() + m.added.size();
    moves.push_back({{"rule", to_string(m.rule)},
                     {"removed", edges(m.removed)},
                     {"added", edges(m.added)},
                     {"size", size}});
  }
  return {{"initial", edges(t.initial)}, {"moves", moves}, {"final", edges(t.final_edges)}};
}

std::string graph_to_dot(const StrandGraph& g, std::string_view name) {
  std::ostringstream out;
  auto node = [](const Site& s) { return "s" + std::to_string(s.vertex) + "_" + std::to_string(s.position); };
  out << "graph " << name << " {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Vertex& vx = g.vertices()[v];
    out << "  subgraph cluster_" << v + 1 << " {\n";
    out << "    label=\"" << v + 1 << " (colour " << vx.colour << ")\";\n";
    for (std::size_t n = 1; n <= vx.length; ++n) {
      const Site s{v + 1, n};
      out << "    " << node(s) << " [label=\"" << to_string(vx.domains[n - 1]) << "\"];\n";
    }
    for (std::size_t n = 1; n < vx.length; ++n)
      out << "    " << node({v + 1, n}) << " -- " << node({v + 1, n + 1})
          << " [color=black, penwidth=2, dir=forward];\n";
    out << "  }\n";
  }
  for (std::size_t i = 0; i < g.admissible().size(); ++i) {
    const Edge& e = g.admissible()[i];
    const bool current = g.is_current(e);
    const bool toehold = g.toehold_flags()[i];
    out << "  " << node(e.first) << " -- " << node(e.second) << " [color="
        << (current ? "red" : "blue") << ", style=" << (toehold ? "dashed" : "solid") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string describe_graph(const StrandGraph& g) {
  std::ostringstream out;
  const std::size_t n = g.vertex_count();
  out << "V = {";
  for (std::size_t v = 1; v <= n; ++v) out << (v > 1 ? ", " : "") << v;
  out << "}\nlength = {";
  for (std::size_t v = 1; v <= n; ++v)
    out << (v > 1 ? ", " : "") << v << " -> " << g.vertices()[v - 1].length;
  out << "}\ncolour = {";
  for (std::size_t v = 1; v <= n; ++v)
    out << (v > 1 ? ", " : "") << v << " -> " << g.vertices()[v - 1].colour;
  out << "}\nA = " << format_edges(g.admissible()) << "\ntoehold = ";
  std::vector<Edge> toeholds;
  for (std::size_t i = 0; i < g.admissible().size(); ++i)
    if (g.toehold_flags()[i]) toeholds.push_back(g.admissible()[i]);
  if (toeholds.empty()) {
    out << "{}";
  } else {
    out << "{";
    for (const auto& e : toeholds) out << to_string(e) << " -> true, ";
    out << "other -> false}";
  }
  out << "\nE = " << format_edges(g.current()) << "\n";
  return out.str();
}

}  // namespace dnaprover
