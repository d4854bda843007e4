#pragma once

// Simple undirected graphs and digraphs over string labels, plus the two
// operators everything else is built on: the competition graph of a digraph
// and acyclic (topological) orderings.

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "compnum/errors.hpp"

namespace compnum {

using Vertex = std::string;
using VertexSet = std::set<Vertex>;
// Undirected edges are stored with first < second.
using Edge = std::pair<Vertex, Vertex>;
using Arc = std::pair<Vertex, Vertex>;

inline Edge make_edge(const Vertex& a, const Vertex& b) {
  if (a == b) throw Error(ErrorKind::InvalidGraph, "loop at '" + a + "'");
  return a < b ? Edge{a, b} : Edge{b, a};
}

class Graph {
 public:
  Graph() = default;

  template <class Range>
  explicit Graph(const Range& vertices) {
    for (const auto& v : vertices) add_vertex(v);
  }

  Graph(std::initializer_list<Vertex> vertices, std::initializer_list<Edge> edges = {}) {
    for (const auto& v : vertices) add_vertex(v);
    for (const auto& [a, b] : edges) add_edge(a, b);
  }

  // Returns false if the label was already present.
  bool add_vertex(const Vertex& v) {
    if (!vertices_.insert(v).second) return false;
    adj_.emplace(v, VertexSet{});
    return true;
  }

  void add_edge(const Vertex& a, const Vertex& b) {
    Edge e = make_edge(a, b);
    require(a);
    require(b);
    if (edges_.insert(e).second) {
      adj_[a].insert(b);
      adj_[b].insert(a);
    }
  }

  void remove_edge(const Vertex& a, const Vertex& b) {
    if (edges_.erase(make_edge(a, b))) {
      adj_[a].erase(b);
      adj_[b].erase(a);
    }
  }

  void remove_vertex(const Vertex& v) {
    require(v);
    for (const auto& w : adj_.at(v)) {
      adj_[w].erase(v);
      edges_.erase(make_edge(v, w));
    }
    adj_.erase(v);
    vertices_.erase(v);
  }

  bool has_vertex(const Vertex& v) const { return vertices_.count(v) != 0; }
  bool has_edge(const Vertex& a, const Vertex& b) const {
    return a != b && edges_.count(make_edge(a, b)) != 0;
  }

  const VertexSet& vertices() const noexcept { return vertices_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const VertexSet& neighbors(const Vertex& v) const {
    require(v);
    return adj_.at(v);
  }
  std::size_t degree(const Vertex& v) const { return neighbors(v).size(); }

  Graph induced(const VertexSet& keep) const {
    Graph sub;
    for (const auto& v : keep) {
      require(v);
      sub.add_vertex(v);
    }
    for (const auto& [a, b] : edges_)
      if (keep.count(a) && keep.count(b)) sub.add_edge(a, b);
    return sub;
  }

  void require(const Vertex& v) const {
    if (!has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "'" + v + "'");
  }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
  }

 private:
  VertexSet vertices_;
  std::set<Edge> edges_;
  std::map<Vertex, VertexSet> adj_;
};

class Digraph {
 public:
  Digraph() = default;

  template <class Range>
  explicit Digraph(const Range& vertices) {
    for (const auto& v : vertices) add_vertex(v);
  }

  Digraph(std::initializer_list<Vertex> vertices, std::initializer_list<Arc> arcs = {}) {
    for (const auto& v : vertices) add_vertex(v);
    for (const auto& [a, b] : arcs) add_arc(a, b);
  }

  bool add_vertex(const Vertex& v) {
    if (!vertices_.insert(v).second) return false;
    out_.emplace(v, VertexSet{});
    in_.emplace(v, VertexSet{});
    return true;
  }

  void add_arc(const Vertex& from, const Vertex& to) {
    if (from == to) throw Error(ErrorKind::InvalidGraph, "loop at '" + from + "'");
    require(from);
    require(to);
    if (arcs_.emplace(from, to).second) {
      out_[from].insert(to);
      in_[to].insert(from);
    }
  }

  void remove_arc(const Vertex& from, const Vertex& to) {
    if (arcs_.erase({from, to})) {
      out_[from].erase(to);
      in_[to].erase(from);
    }
  }

  void remove_vertex(const Vertex& v) {
    require(v);
    for (const auto& w : VertexSet(out_.at(v))) remove_arc(v, w);
    for (const auto& w : VertexSet(in_.at(v))) remove_arc(w, v);
    out_.erase(v);
    in_.erase(v);
    vertices_.erase(v);
  }

  // Relabels `from` as `to`; `to` must be a fresh label.
  void rename_vertex(const Vertex& from, const Vertex& to) {
    require(from);
    if (from == to) return;
    if (has_vertex(to)) throw Error(ErrorKind::VertexCollision, "'" + to + "' already present");
    VertexSet outs = out_.at(from);
    VertexSet ins = in_.at(from);
    remove_vertex(from);
    add_vertex(to);
    for (const auto& w : outs) add_arc(to, w);
    for (const auto& w : ins) add_arc(w, to);
  }

  bool has_vertex(const Vertex& v) const { return vertices_.count(v) != 0; }
  bool has_arc(const Vertex& from, const Vertex& to) const { return arcs_.count({from, to}) != 0; }

  const VertexSet& vertices() const noexcept { return vertices_; }
  const std::set<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }

  const VertexSet& out_neighbors(const Vertex& v) const {
    require(v);
    return out_.at(v);
  }
  const VertexSet& in_neighbors(const Vertex& v) const {
    require(v);
    return in_.at(v);
  }

  Digraph induced(const VertexSet& keep) const {
    Digraph sub;
    for (const auto& v : keep) {
      require(v);
      sub.add_vertex(v);
    }
    for (const auto& [a, b] : arcs_)
      if (keep.count(a) && keep.count(b)) sub.add_arc(a, b);
    return sub;
  }

  void require(const Vertex& v) const {
    if (!has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "'" + v + "'");
  }

  friend bool operator==(const Digraph& x, const Digraph& y) {
    return x.vertices_ == y.vertices_ && x.arcs_ == y.arcs_;
  }

 private:
  VertexSet vertices_;
  std::set<Arc> arcs_;
  std::map<Vertex, VertexSet> out_;
  std::map<Vertex, VertexSet> in_;
};

inline Graph edgeless_graph(const VertexSet& vertices) { return Graph(vertices); }

// G ∪ I_k with the given labels for the isolated vertices.
inline Graph with_isolated(Graph g, const std::vector<Vertex>& added) {
  for (const auto& z : added)
    if (!g.add_vertex(z)) throw Error(ErrorKind::VertexCollision, "'" + z + "' already in graph");
  return g;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out = g;
  for (const auto& v : h.vertices())
    if (!out.add_vertex(v)) throw Error(ErrorKind::VertexCollision, "'" + v + "' in both graphs");
  for (const auto& [a, b] : h.edges()) out.add_edge(a, b);
  return out;
}

// Union of the complete graphs on every in-neighborhood.
inline Graph competition_graph(const Digraph& d) {
  Graph c(d.vertices());
  for (const auto& x : d.vertices()) {
    const auto& preds = d.in_neighbors(x);
    for (auto i = preds.begin(); i != preds.end(); ++i)
      for (auto j = std::next(i); j != preds.end(); ++j) c.add_edge(*i, *j);
  }
  return c;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (const auto& root : g.vertices()) {
    if (seen.count(root)) continue;
    VertexSet comp{root};
    std::vector<Vertex> stack{root};
    seen.insert(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& w : g.neighbors(v))
        if (seen.insert(w).second) {
          comp.insert(w);
          stack.push_back(w);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// A sequence of every vertex of a digraph in which all arcs point forward.
class AcyclicOrdering {
 public:
  AcyclicOrdering() = default;
  explicit AcyclicOrdering(std::vector<Vertex> order) : order_(std::move(order)) {
    for (std::size_t i = 0; i < order_.size(); ++i)
      if (!position_.emplace(order_[i], i).second)
        throw Error(ErrorKind::InvalidInput, "ordering repeats '" + order_[i] + "'");
  }

  const std::vector<Vertex>& sequence() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  const Vertex& operator[](std::size_t i) const { return order_.at(i); }

  std::size_t position(const Vertex& v) const {
    auto it = position_.find(v);
    if (it == position_.end()) throw Error(ErrorKind::UnknownVertex, "'" + v + "' not in ordering");
    return it->second;
  }

  // True iff the sequence is a permutation of V(d) and every arc points forward.
  bool validates(const Digraph& d) const {
    if (order_.size() != d.num_vertices()) return false;
    for (const auto& v : d.vertices())
      if (!position_.count(v)) return false;
    for (const auto& [a, b] : d.arcs())
      if (position_.at(a) >= position_.at(b)) return false;
    return true;
  }

  friend bool operator==(const AcyclicOrdering& x, const AcyclicOrdering& y) {
    return x.order_ == y.order_;
  }

 private:
  std::vector<Vertex> order_;
  std::map<Vertex, std::size_t> position_;
};

namespace detail {

// Some directed cycle inside the vertices Kahn's algorithm could not remove.
inline std::vector<Vertex> find_cycle(const Digraph& d, const VertexSet& stuck) {
  // Every stuck vertex has a stuck in-neighbor, so walking backwards must repeat.
  Vertex v = *stuck.begin();
  std::map<Vertex, std::size_t> seen_at;
  std::vector<Vertex> walk;
  while (!seen_at.count(v)) {
    seen_at.emplace(v, walk.size());
    walk.push_back(v);
    for (const auto& p : d.in_neighbors(v))
      if (stuck.count(p)) {
        v = p;
        break;
      }
  }
  std::vector<Vertex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at.at(v)), walk.end());
  std::reverse(cycle.begin(), cycle.end());
  // Rotate so the smallest label leads, then close the walk.
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  cycle.push_back(cycle.front());
  return cycle;
}

}  // namespace detail

// Kahn's algorithm; among available vertices the one preferred by `before`
// is emitted first. Throws CyclicDigraphError with a witness cycle.
template <class Before>
AcyclicOrdering acyclic_ordering(const Digraph& d, Before before) {
  auto heap_cmp = [&](const Vertex& a, const Vertex& b) { return before(b, a); };
  std::priority_queue<Vertex, std::vector<Vertex>, decltype(heap_cmp)> ready(heap_cmp);
  std::map<Vertex, std::size_t> indeg;
  for (const auto& v : d.vertices()) {
    indeg[v] = d.in_neighbors(v).size();
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(d.num_vertices());
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const auto& w : d.out_neighbors(v))
      if (--indeg[w] == 0) ready.push(w);
  }
  if (order.size() != d.num_vertices()) {
    VertexSet stuck;
    for (const auto& [v, deg] : indeg)
      if (deg > 0) stuck.insert(v);
    throw CyclicDigraphError(detail::find_cycle(d, stuck));
  }
  return AcyclicOrdering(std::move(order));
}

inline AcyclicOrdering acyclic_ordering(const Digraph& d) {
  return acyclic_ordering(d, std::less<Vertex>{});
}

inline bool is_acyclic(const Digraph& d) {
  try {
    acyclic_ordering(d);
    return true;
  } catch (const CyclicDigraphError&) {
    return false;
  }
}

}  // namespace compnum
