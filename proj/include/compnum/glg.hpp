#pragma once

// Line graphs, cocktail party graphs and generalized line graphs L(H,f),
// with vertex labels that record where each vertex came from.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "compnum/cliques.hpp"
#include "compnum/graph.hpp"

namespace compnum {

/// A graph H with a non-negative integer weight on every vertex.
class VertexWeightedGraph {
 public:
  VertexWeightedGraph() = default;

  // Vertices missing from `weights` get weight 0.
  explicit VertexWeightedGraph(Graph h, const std::map<Vertex, int>& weights = {})
      : h_(std::move(h)) {
    for (const auto& [v, w] : weights) {
      if (!h_.has_vertex(v))
        throw Error(ErrorKind::UnknownVertex, "weight given for '" + v + "' which is not in H");
      if (w < 0) throw Error(ErrorKind::InvalidInput, "negative weight at '" + v + "'");
    }
    for (const auto& v : h_.vertices()) {
      auto it = weights.find(v);
      f_[v] = it == weights.end() ? 0 : it->second;
    }
  }

  const Graph& graph() const noexcept { return h_; }
  const std::map<Vertex, int>& weights() const noexcept { return f_; }
  int weight(const Vertex& v) const {
    h_.require(v);
    return f_.at(v);
  }

  bool is_zero() const {
    for (const auto& [v, w] : f_)
      if (w) return false;
    return true;
  }
  int total_weight() const {
    int s = 0;
    for (const auto& [v, w] : f_) s += w;
    return s;
  }
  int max_weight() const {
    int m = 0;
    for (const auto& [v, w] : f_) m = std::max(m, w);
    return m;
  }
  // Positive-weight vertices in label order.
  std::vector<Vertex> support() const {
    std::vector<Vertex> out;
    for (const auto& [v, w] : f_)
      if (w > 0) out.push_back(v);
    return out;
  }

  VertexWeightedGraph with_weight(const Vertex& v, int w) const {
    auto f = f_;
    h_.require(v);
    f[v] = w;
    return VertexWeightedGraph(h_, f);
  }

  friend bool operator==(const VertexWeightedGraph& a, const VertexWeightedGraph& b) {
    return a.h_ == b.h_ && a.f_ == b.f_;
  }

 private:
  Graph h_;
  std::map<Vertex, int> f_;
};

struct EdgeVertex {
  Vertex a;  // a < b
  Vertex b;
  friend bool operator==(const EdgeVertex&, const EdgeVertex&) = default;
};

enum class Side { X, Y };

struct CocktailVertex {
  Vertex anchor;  // empty for a free-standing CP(m)
  int pair = 1;   // 1..f(anchor)
  Side side = Side::X;
  friend bool operator==(const CocktailVertex&, const CocktailVertex&) = default;
};

using GlgVertex = std::variant<EdgeVertex, CocktailVertex>;

inline Vertex render(const EdgeVertex& e) { return "e:" + e.a + "-" + e.b; }

inline Vertex render(const CocktailVertex& q) {
  std::string side = q.side == Side::X ? "x" : "y";
  if (q.anchor.empty()) return side + std::to_string(q.pair);
  return "q:" + q.anchor + ":" + std::to_string(q.pair) + ":" + side;
}

inline Vertex render(const GlgVertex& v) {
  return std::visit([](const auto& x) { return render(x); }, v);
}

inline Vertex edge_label(const Vertex& a, const Vertex& b) {
  Edge e = make_edge(a, b);
  return render(EdgeVertex{e.first, e.second});
}
inline Vertex edge_label(const Edge& e) { return edge_label(e.first, e.second); }

inline Vertex cocktail_label(const Vertex& anchor, int pair, Side side) {
  return render(CocktailVertex{anchor, pair, side});
}

/// A generated graph whose vertices remember their GlgVertex origin.
struct LabeledGraph {
  Graph graph;
  std::map<Vertex, GlgVertex> origin;
  VertexWeightedGraph source;

  // Labels of the cocktail vertices of Q_anchor.
  VertexSet block(const Vertex& anchor) const {
    VertexSet out;
    for (const auto& [label, o] : origin)
      if (auto q = std::get_if<CocktailVertex>(&o); q && q->anchor == anchor) out.insert(label);
    return out;
  }
};

inline LabeledGraph line_graph(const Graph& h) {
  LabeledGraph out;
  out.source = VertexWeightedGraph(h);
  for (const auto& [a, b] : h.edges()) {
    EdgeVertex ev{a, b};
    out.graph.add_vertex(render(ev));
    out.origin.emplace(render(ev), ev);
  }
  for (const auto& v : h.vertices()) {
    const auto& nbrs = h.neighbors(v);
    for (auto i = nbrs.begin(); i != nbrs.end(); ++i)
      for (auto j = std::next(i); j != nbrs.end(); ++j)
        out.graph.add_edge(edge_label(v, *i), edge_label(v, *j));
  }
  return out;
}

// CP(m) on x_l, y_l for l in [m]; with an anchor the labels are q:anchor:l:side.
inline LabeledGraph cocktail_party(int m, const Vertex& anchor = "") {
  if (m < 1) throw Error(ErrorKind::NonPositiveM, "m = " + std::to_string(m));
  LabeledGraph out;
  for (int l = 1; l <= m; ++l)
    for (Side s : {Side::X, Side::Y}) {
      CocktailVertex q{anchor, l, s};
      out.graph.add_vertex(render(q));
      out.origin.emplace(render(q), q);
    }
  for (const auto& [la, oa] : out.origin)
    for (const auto& [lb, ob] : out.origin) {
      if (la >= lb) continue;
      if (std::get<CocktailVertex>(oa).pair != std::get<CocktailVertex>(ob).pair)
        out.graph.add_edge(la, lb);
    }
  return out;
}

// K_H(v): the edges of H at v, as vertices of L(H).
inline Clique incident_edge_clique(const Graph& h, const Vertex& v) {
  Clique k;
  for (const auto& w : h.neighbors(v)) k.insert(edge_label(v, w));
  return k;
}

inline LabeledGraph generalized_line_graph(const VertexWeightedGraph& w) {
  const Graph& h = w.graph();
  LabeledGraph out = line_graph(h);
  out.source = w;
  for (const auto& v : w.support()) {
    LabeledGraph q = cocktail_party(w.weight(v), v);
    out.graph = disjoint_union(out.graph, q.graph);
    out.origin.insert(q.origin.begin(), q.origin.end());
    for (const auto& e : incident_edge_clique(h, v))
      for (const auto& x : q.graph.vertices()) out.graph.add_edge(e, x);
  }
  return out;
}

// G_0 = L(H), G_i = G_{i-1} ⋉_{K_H(v_i)} Q_{v_i} over the support in label
// order; the last entry equals L(H,f).
inline std::vector<Graph> semi_join_chain(const VertexWeightedGraph& w) {
  std::vector<Graph> chain{line_graph(w.graph()).graph};
  for (const auto& v : w.support()) {
    Graph q = cocktail_party(w.weight(v), v).graph;
    chain.push_back(semi_join(chain.back(), incident_edge_clique(w.graph(), v), q));
  }
  return chain;
}

}  // namespace compnum
