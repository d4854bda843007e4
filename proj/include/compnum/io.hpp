#pragma once

// JSON instance files, certificate and verdict JSON, and DOT output.
// Needs nlohmann/json (vendor/json.hpp).

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "compnum/analysis.hpp"
#include "json.hpp"

namespace compnum {

using Json = nlohmann::ordered_json;  // keeps "kind" first in output

namespace detail {

[[noreturn]] inline void schema_error(const std::string& field, const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, "field '" + field + "': " + msg);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

inline std::vector<Vertex> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of strings");
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) schema_error(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

inline std::vector<std::pair<Vertex, Vertex>> pair_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of pairs");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    auto items = string_list(j[i], p);
    if (items.size() != 2) schema_error(p, "expected exactly two labels");
    out.emplace_back(items[0], items[1]);
  }
  return out;
}

inline VertexSet unique_vertices(const Json& j, const std::string& path) {
  VertexSet out;
  for (const auto& v : string_list(j, path))
    if (!out.insert(v).second) schema_error(path, "duplicate label '" + v + "'");
  return out;
}

inline void check_kind(const Json& j, const std::string& expected) {
  if (auto it = j.find("kind"); it != j.end() && *it != expected)
    schema_error("kind", "expected \"" + expected + "\", got " + it->dump());
}

inline Json edge_array(const std::set<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

}  // namespace detail

inline Json to_json(const Graph& g) {
  return {{"kind", "graph"}, {"vertices", g.vertices()}, {"edges", detail::edge_array(g.edges())}};
}

inline Json to_json(const Digraph& d) {
  return {{"kind", "digraph"}, {"vertices", d.vertices()}, {"arcs", detail::edge_array(d.arcs())}};
}

inline Json to_json(const VertexWeightedGraph& w) {
  Json j = to_json(w.graph());
  j["kind"] = "weighted_graph";
  j["weights"] = w.weights();
  return j;
}

inline Graph graph_from_json(const Json& j) {
  detail::check_kind(j, "graph");
  Graph g(detail::unique_vertices(detail::field(j, "vertices", ""), "vertices"));
  for (const auto& [a, b] : detail::pair_list(detail::field(j, "edges", ""), "edges")) {
    try {
      g.add_edge(a, b);
    } catch (const Error& e) {
      detail::schema_error("edges", e.what());
    }
  }
  return g;
}

inline Digraph digraph_from_json(const Json& j) {
  detail::check_kind(j, "digraph");
  Digraph d(detail::unique_vertices(detail::field(j, "vertices", ""), "vertices"));
  for (const auto& [a, b] : detail::pair_list(detail::field(j, "arcs", ""), "arcs")) {
    try {
      d.add_arc(a, b);
    } catch (const Error& e) {
      detail::schema_error("arcs", e.what());
    }
  }
  return d;
}

inline VertexWeightedGraph weighted_graph_from_json(const Json& j) {
  detail::check_kind(j, "weighted_graph");
  Json plain = j;
  plain.erase("kind");
  Graph h = graph_from_json(plain);
  std::map<Vertex, int> f;
  if (auto it = j.find("weights"); it != j.end()) {
    if (!it->is_object()) detail::schema_error("weights", "expected an object");
    for (const auto& [v, x] : it->items()) {
      if (!x.is_number_integer()) detail::schema_error("weights." + v, "expected an integer");
      f[v] = x.get<int>();
    }
  }
  try {
    return VertexWeightedGraph(h, f);
  } catch (const Error& e) {
    detail::schema_error("weights", e.what());
  }
}

using Instance = std::variant<Graph, Digraph, VertexWeightedGraph>;

inline Instance instance_from_json(const Json& j) {
  const Json& kind = detail::field(j, "kind", "");
  if (kind == "graph") return graph_from_json(j);
  if (kind == "digraph") return digraph_from_json(j);
  if (kind == "weighted_graph") return weighted_graph_from_json(j);
  detail::schema_error("kind", "unknown kind " + kind.dump());
}

// A plain graph is read as (H, 0).
inline VertexWeightedGraph as_weighted(const Instance& inst) {
  if (auto w = std::get_if<VertexWeightedGraph>(&inst)) return *w;
  if (auto g = std::get_if<Graph>(&inst)) return VertexWeightedGraph(*g);
  detail::schema_error("kind", "expected a graph or weighted_graph, got a digraph");
}

inline Graph as_graph(const Instance& inst) {
  if (auto g = std::get_if<Graph>(&inst)) return *g;
  if (auto w = std::get_if<VertexWeightedGraph>(&inst)) return w->graph();
  detail::schema_error("kind", "expected a graph, got a digraph");
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json to_json(const RealizationCertificate& c) {
  return {{"digraph", to_json(c.digraph)}, {"base_graph", to_json(c.base)},
          {"k", c.k},                      {"added", c.added},
          {"ordering", c.ordering.sequence()}, {"relabeling", c.relabeling}};
}

// Re-verifies; the stored ordering must also validate.
inline RealizationCertificate certificate_from_json(const Json& j) {
  Digraph d = digraph_from_json(detail::field(j, "digraph", ""));
  Graph g = graph_from_json(detail::field(j, "base_graph", ""));
  const Json& k = detail::field(j, "k", "");
  if (!k.is_number_integer()) detail::schema_error("k", "expected an integer");
  RealizationCertificate c = verify_realization(d, g, k.get<int>());
  if (c.added != detail::string_list(detail::field(j, "added", ""), "added"))
    detail::schema_error("added", "does not match V(D) \\ V(G)");
  AcyclicOrdering ord(detail::string_list(detail::field(j, "ordering", ""), "ordering"));
  if (!ord.validates(d)) detail::schema_error("ordering", "not an acyclic ordering of the digraph");
  c.ordering = ord;
  if (auto it = j.find("relabeling"); it != j.end()) {
    if (!it->is_object()) detail::schema_error("relabeling", "expected an object");
    for (const auto& [from, to] : it->items()) c.relabeling[from] = to.get<std::string>();
  }
  return c;
}

inline Json to_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"bound_prunes", s.bound_prunes},
          {"memo_prunes", s.memo_prunes},
          {"dominated_slots", s.dominated_slots},
          {"dead_ends", s.dead_ends}};
}

inline Json to_json(const ConditionReport& r) {
  Json j{{"thm27_i", r.thm27_i},
         {"thm27_ii", r.thm27_ii},
         {"thm29_ii", r.thm29_ii},
         {"hypotheses",
          {{"connected", r.hypotheses.connected},
           {"has_edge", r.hypotheses.has_edge},
           {"nonzero_f", r.hypotheses.nonzero_f}}}};
  j["thm27_i_vertex"] = r.thm27_i_vertex ? Json(*r.thm27_i_vertex) : Json(nullptr);
  j["thm27_ii_vertex"] = r.thm27_ii_vertex ? Json(*r.thm27_ii_vertex) : Json(nullptr);
  j["thm29_i"] = r.thm29_i ? Json{r.thm29_i->first, r.thm29_i->second} : Json(nullptr);
  return j;
}

inline Json to_json(const Verdict& v) {
  Json evidence = Json::array();
  for (const auto& e : v.evidence) {
    Json item{{"claim", e.claim}, {"source", to_string(e.source)}};
    if (e.certificate) item["certificate"] = to_json(*e.certificate);
    if (e.reduction)
      item["reduction"] = {{"deleted", e.reduction->deleted},
                           {"graph", to_json(e.reduction->graph)},
                           {"stopped_at_floor", e.reduction->stopped_at_floor}};
    if (e.search) item["search"] = to_json(*e.search);
    evidence.push_back(std::move(item));
  }
  return {{"k_value", to_string(v.k_value)},
          {"evidence", std::move(evidence)},
          {"conditions", to_json(v.conditions)}};
}

namespace detail {

inline std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << detail::dot_id(name) << " {\n";
  for (const auto& v : g.vertices()) os << "  " << detail::dot_id(v) << ";\n";
  for (const auto& [a, b] : g.edges())
    os << "  " << detail::dot_id(a) << " -- " << detail::dot_id(b) << ";\n";
  os << "}\n";
  return os.str();
}

// Vertices in `added` are drawn as boxes.
inline std::string to_dot(const Digraph& d, const VertexSet& added = {}, const std::string& name = "D") {
  std::ostringstream os;
  os << "digraph " << detail::dot_id(name) << " {\n";
  for (const auto& v : d.vertices()) {
    os << "  " << detail::dot_id(v);
    if (added.count(v)) os << " [shape=box]";
    os << ";\n";
  }
  for (const auto& [a, b] : d.arcs())
    os << "  " << detail::dot_id(a) << " -> " << detail::dot_id(b) << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const RealizationCertificate& c) {
  return to_dot(c.digraph, VertexSet(c.added.begin(), c.added.end()));
}

}  // namespace compnum
