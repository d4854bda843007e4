#pragma once

// Small-graph generators for the sweeps: graphs up to isomorphism, connected
// graphs by edge count, weight maps, and a few named families.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "compnum/glg.hpp"
#include "compnum/graph.hpp"

namespace corpus {

using compnum::Graph;
using compnum::Vertex;
using compnum::VertexWeightedGraph;

inline Vertex name(int i) { return std::string(1, static_cast<char>('a' + i)); }

// Edge list on vertices 0..n-1, normalized to i < j and sorted.
using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList canonical(int n, const EdgeList& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList e;
    for (auto [a, b] : edges) {
      int x = perm[a], y = perm[b];
      e.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(e.begin(), e.end());
    if (first || e < best) {
      best = e;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph to_graph(int n, const EdgeList& edges) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(name(i));
  for (auto [a, b] : edges) g.add_edge(name(a), name(b));
  return g;
}

// All graphs on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<EdgeList> seen;
  std::vector<Graph> out;
  for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
    EdgeList e;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) e.push_back(slots[s]);
    if (seen.insert(canonical(n, e)).second) out.push_back(to_graph(n, e));
  }
  return out;
}

// Connected graphs with 1..max_edges edges and no isolated vertices, one per
// isomorphism class, grown edge by edge.
inline std::vector<Graph> connected_by_edges(int max_edges) {
  std::vector<std::pair<int, EdgeList>> level{{2, {{0, 1}}}};
  std::vector<Graph> out{to_graph(2, {{0, 1}})};
  for (int m = 2; m <= max_edges; ++m) {
    std::set<std::pair<int, EdgeList>> next;
    for (const auto& [n, edges] : level) {
      std::set<std::pair<int, int>> have(edges.begin(), edges.end());
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b <= n; ++b) {  // b == n adds a new vertex
          if (b < n && have.count({a, b})) continue;
          EdgeList e = edges;
          e.emplace_back(a, b);
          int nn = b == n ? n + 1 : n;
          next.insert({nn, canonical(nn, e)});
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& [n, e] : level) out.push_back(to_graph(n, e));
  }
  return out;
}

inline std::vector<Graph> connected_with_edges(int min_edges, int max_edges) {
  std::vector<Graph> out;
  for (auto& g : connected_by_edges(max_edges))
    if (static_cast<int>(g.num_edges()) >= min_edges) out.push_back(std::move(g));
  return out;
}

// Every weight map with values in [0, max_value] and total at most max_total.
inline std::vector<VertexWeightedGraph> weightings(const Graph& h, int max_value, int max_total) {
  std::vector<Vertex> vs(h.vertices().begin(), h.vertices().end());
  std::vector<VertexWeightedGraph> out;
  std::map<Vertex, int> f;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int total) {
    if (i == vs.size()) {
      out.emplace_back(h, f);
      return;
    }
    for (int x = 0; x <= max_value && total + x <= max_total; ++x) {
      f[vs[i]] = x;
      rec(i + 1, total + x);
    }
    f.erase(vs[i]);
  };
  rec(0, 0);
  return out;
}

inline Graph cycle(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(name(i));
  for (int i = 0; i < n; ++i) g.add_edge(name(i), name((i + 1) % n));
  return g;
}

inline Graph complete_bipartite(int p, int q) {
  Graph g;
  for (int i = 0; i < p + q; ++i) g.add_vertex(name(i));
  for (int i = 0; i < p; ++i)
    for (int j = p; j < p + q; ++j) g.add_edge(name(i), name(j));
  return g;
}

// Chordal iff repeated removal of simplicial vertices empties the graph.
inline bool is_chordal(Graph g) {
  while (g.num_vertices()) {
    bool removed = false;
    for (const auto& v : g.vertices()) {
      const auto nb = g.neighbors(v);
      bool clique = true;
      for (auto i = nb.begin(); clique && i != nb.end(); ++i)
        for (auto j = std::next(i); j != nb.end(); ++j)
          if (!g.has_edge(*i, *j)) {
            clique = false;
            break;
          }
      if (clique) {
        g.remove_vertex(v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

}  // namespace corpus
