#pragma once

// Cliques, simplicial vertices, exact clique-cover numbers and the
// neighborhood clique-cover lower bound on the competition number.

#include <algorithm>
#include <limits>
#include <vector>

#include "compnum/bitgraph.hpp"
#include "compnum/graph.hpp"

namespace compnum {

using Clique = VertexSet;

inline constexpr std::size_t kDefaultSizeGuard = 16;

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (const auto& v : s) g.require(v);
  for (auto i = s.begin(); i != s.end(); ++i)
    for (auto j = std::next(i); j != s.end(); ++j)
      if (!g.has_edge(*i, *j)) return false;
  return true;
}

// Isolated vertices count: their (empty) neighborhood is a clique.
inline VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (const auto& v : g.vertices())
    if (is_clique(g, g.neighbors(v))) out.insert(v);
  return out;
}

inline VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (const auto& v : g.vertices())
    if (g.degree(v) == 0) out.insert(v);
  return out;
}

namespace detail {

inline void check_guard(const Graph& g, std::size_t guard) {
  if (g.num_vertices() > guard)
    throw Error(ErrorKind::SizeGuardExceeded, std::to_string(g.num_vertices()) +
                                                  " vertices exceed size guard " +
                                                  std::to_string(guard));
}

// Minimum partition of the vertices into cliques (vertex-by-vertex branching).
class VertexCliqueCover {
 public:
  explicit VertexCliqueCover(const BitGraph& g) : g_(g) {
    for (int i = 0; i < g.size(); ++i) order_.push_back(i);
    // Low-degree vertices constrain the most; place them first.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return popcount(g.adj(a)) < popcount(g.adj(b)); });
  }

  int solve() {
    best_ = g_.size();
    std::vector<Mask> parts;
    recurse(0, parts);
    return best_;
  }

 private:
  void recurse(std::size_t pos, std::vector<Mask>& parts) {
    if (static_cast<int>(parts.size()) >= best_) return;
    if (pos == order_.size()) {
      best_ = static_cast<int>(parts.size());
      return;
    }
    int v = order_[pos];
    for (std::size_t i = 0, count = parts.size(); i < count; ++i) {
      if ((parts[i] & ~g_.adj(v)) == 0) {
        parts[i] |= bit(v);
        recurse(pos + 1, parts);
        parts[i] &= ~bit(v);
      }
    }
    parts.push_back(bit(v));
    recurse(pos + 1, parts);
    parts.pop_back();
  }

  const BitGraph& g_;
  std::vector<int> order_;
  int best_ = 0;
};

// Minimum number of cliques covering every edge; branches over the maximal
// cliques containing the most constrained uncovered edge.
class EdgeCliqueCover {
 public:
  explicit EdgeCliqueCover(const BitGraph& g) : g_(g), cliques_(g.maximal_cliques()) {}

  int solve() {
    std::vector<Mask> uncovered(g_.size());
    for (int i = 0; i < g_.size(); ++i) uncovered[i] = g_.adj(i);
    best_ = static_cast<int>(g_.num_edges());
    recurse(uncovered, 0);
    return best_;
  }

 private:
  void recurse(std::vector<Mask>& uncovered, int used) {
    int a = -1, b = -1;
    int fewest = std::numeric_limits<int>::max();
    bool any = false;
    for (int i = 0; i < g_.size(); ++i) {
      for (Mask rest = uncovered[i] & bits_above(i); rest; rest &= rest - 1) {
        any = true;
        int j = lowest_bit(rest);
        int count = 0;
        for (Mask c : cliques_)
          if ((c & bit(i)) && (c & bit(j))) ++count;
        if (count < fewest) {
          fewest = count;
          a = i;
          b = j;
        }
      }
    }
    if (!any) {
      best_ = std::min(best_, used);
      return;
    }
    if (used + 1 >= best_) return;
    for (Mask c : cliques_) {
      if (!((c & bit(a)) && (c & bit(b)))) continue;
      std::vector<Mask> next = uncovered;
      for (Mask rest = c; rest; rest &= rest - 1) next[lowest_bit(rest)] &= ~c;
      recurse(next, used + 1);
    }
  }

  const BitGraph& g_;
  std::vector<Mask> cliques_;
  int best_ = 0;
};

}  // namespace detail

// θ_V(G), the chromatic number of the complement.
inline int vertex_clique_cover_number(const Graph& g, std::size_t size_guard = kDefaultSizeGuard) {
  detail::check_guard(g, size_guard);
  BitGraph bg(g);
  return detail::VertexCliqueCover(bg).solve();
}

// θ_E(G); 0 for edgeless graphs.
inline int edge_clique_cover_number(const Graph& g, std::size_t size_guard = kDefaultSizeGuard) {
  detail::check_guard(g, size_guard);
  BitGraph bg(g);
  return detail::EdgeCliqueCover(bg).solve();
}

// min over v of θ_V(G[N(v)]), a lower bound on k(G).
inline int opsut_lower_bound(const Graph& g, std::size_t size_guard = kDefaultSizeGuard) {
  if (g.num_vertices() == 0) throw Error(ErrorKind::EmptyGraph, "lower bound of the empty graph");
  int best = std::numeric_limits<int>::max();
  for (const auto& v : g.vertices()) {
    int theta = vertex_clique_cover_number(g.induced(g.neighbors(v)), size_guard);
    best = std::min(best, theta);
    if (best == 0) break;
  }
  return best;
}

// G ⋉_K H: disjoint union plus every edge between K and V(H).
inline Graph semi_join(const Graph& g, const Clique& k, const Graph& h) {
  for (const auto& v : h.vertices())
    if (g.has_vertex(v)) throw Error(ErrorKind::VertexCollision, "'" + v + "' in both graphs");
  if (!is_clique(g, k)) throw Error(ErrorKind::NotAClique, "K is not a clique of G");
  Graph out = disjoint_union(g, h);
  for (const auto& u : k)
    for (const auto& v : h.vertices()) out.add_edge(u, v);
  return out;
}

}  // namespace compnum
