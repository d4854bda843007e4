#pragma once

// Dense bitmask view of a small Graph (at most 64 vertices), indexed in
// lexicographic label order. Used by the exact clique-cover routines and the
// competition-number search.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "compnum/graph.hpp"

namespace compnum {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask bit(int i) { return Mask{1} << i; }
// Bits strictly above position i.
inline Mask bits_above(int i) { return ~((Mask{2} << i) - 1); }
// Bits strictly below position i.
inline Mask bits_below(int i) { return bit(i) - 1; }

class BitGraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  explicit BitGraph(const Graph& g) : labels_(g.vertices().begin(), g.vertices().end()) {
    if (labels_.size() > kMaxVertices)
      throw Error(ErrorKind::SizeGuardExceeded,
                  std::to_string(labels_.size()) + " vertices exceed the 64-vertex bitmask limit");
    adj_.assign(labels_.size(), 0);
    for (const auto& [a, b] : g.edges()) {
      int i = index(a), j = index(b);
      adj_[i] |= bit(j);
      adj_[j] |= bit(i);
    }
  }

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  Mask all() const noexcept { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }
  Mask adj(int i) const { return adj_[i]; }
  bool adjacent(int i, int j) const { return (adj_[i] >> j) & 1; }
  const Vertex& label(int i) const { return labels_[i]; }
  const std::vector<Vertex>& labels() const noexcept { return labels_; }

  int index(const Vertex& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) throw Error(ErrorKind::UnknownVertex, "'" + v + "'");
    return static_cast<int>(it - labels_.begin());
  }

  Mask mask_of(const VertexSet& s) const {
    Mask m = 0;
    for (const auto& v : s) m |= bit(index(v));
    return m;
  }

  VertexSet set_of(Mask m) const {
    VertexSet s;
    for (; m; m &= m - 1) s.insert(labels_[lowest_bit(m)]);
    return s;
  }

  bool is_clique(Mask m) const {
    for (Mask rest = m; rest; rest &= rest - 1) {
      int i = lowest_bit(rest);
      if ((m & ~bit(i) & ~adj_[i]) != 0) return false;
    }
    return true;
  }

  std::size_t num_edges() const {
    std::size_t twice = 0;
    for (Mask a : adj_) twice += static_cast<std::size_t>(popcount(a));
    return twice / 2;
  }

  // Maximal cliques of the subgraph induced by `within` (Bron–Kerbosch with
  // pivoting). Output order is deterministic.
  std::vector<Mask> maximal_cliques(Mask within) const {
    std::vector<Mask> out;
    if (within == 0) return out;
    bron_kerbosch(0, within, 0, within, out);
    return out;
  }
  std::vector<Mask> maximal_cliques() const { return maximal_cliques(all()); }

 private:
  void bron_kerbosch(Mask r, Mask p, Mask x, Mask within, std::vector<Mask>& out) const {
    if (p == 0 && x == 0) {
      out.push_back(r);
      return;
    }
    Mask px = p | x;
    int pivot = lowest_bit(px);
    int best = -1;
    for (Mask rest = px; rest; rest &= rest - 1) {
      int u = lowest_bit(rest);
      int c = popcount(p & adj_[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Mask cand = p & ~adj_[pivot]; cand; cand &= cand - 1) {
      int v = lowest_bit(cand);
      Mask nv = adj_[v] & within;
      bron_kerbosch(r | bit(v), p & nv, x & nv, within, out);
      p &= ~bit(v);
      x |= bit(v);
    }
  }

  std::vector<Vertex> labels_;
  std::vector<Mask> adj_;
};

}  // namespace compnum
