#pragma once

// Exact competition numbers by search over clique assignments.
//
// An acyclic D with C(D) = G ∪ I_k is the same thing as an ordering
// v_1..v_{n+k} (added vertices last) together with cliques S_i ⊆ {v_j : j < i}
// of G whose pairs cover E(G): put N^-(v_i) = S_i. The search builds the
// ordering from the back. The k added slots are chosen first; then a vertex
// may be taken as the last of the remaining ones only if every edge at it is
// already covered, since no earlier slot can contain it. Reductions:
//   - any vertex whose edges are all covered can be taken next without loss
//     (move it to the end of any completion and drop it from later slots;
//     only already covered pairs are lost), so vertices are never branched on;
//   - a slot may be enlarged to a maximal clique of the remaining vertices,
//     and a choice whose newly covered edges are a subset of another's is
//     dominated, so only undominated traces of maximal cliques are tried;
//   - r remaining vertices offer at most r - 2 edge-covering slots, which must
//     beat a greedy packing of pairwise clique-incompatible uncovered edges;
//   - the future depends only on (remaining set, uncovered edges), so failed
//     states are memoized.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "compnum/bitgraph.hpp"
#include "compnum/cliques.hpp"
#include "compnum/graph.hpp"
#include "compnum/realization.hpp"

namespace compnum {

struct SearchBudget {
  int max_total_vertices = 11;
  int max_k = 4;
  std::optional<std::uint64_t> node_limit;
  // Off only for cross-checking the pruning rules.
  bool bound_pruning = true;
  bool memoization = true;
  // competition_number starts at the neighborhood clique-cover lower bound
  // instead of k = 0.
  bool start_at_lower_bound = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t bound_prunes = 0;
  std::uint64_t memo_prunes = 0;
  std::uint64_t dominated_slots = 0;
  std::uint64_t dead_ends = 0;  // no remaining vertex had all its edges covered

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    bound_prunes += o.bound_prunes;
    memo_prunes += o.memo_prunes;
    dominated_slots += o.dominated_slots;
    dead_ends += o.dead_ends;
    return *this;
  }
};

enum class SearchOutcome { Found, NotFound, BudgetExceeded };

inline const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::NotFound: return "not-found";
    case SearchOutcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NotFound;
  std::optional<Digraph> witness;
  std::vector<Vertex> added;
  std::vector<Vertex> ordering;  // of the witness, added vertices last
  SearchStats stats;
};

namespace detail {

class CliqueAssignmentSearch {
 public:
  CliqueAssignmentSearch(const Graph& g, int k, const SearchBudget& budget,
                         std::vector<Vertex> prefix)
      : g_(g), bg_(g), n_(bg_.size()), k_(k), budget_(budget), cliques_(bg_.maximal_cliques()) {
    for (const auto& v : prefix) {
      int i = bg_.index(v);
      if (prefix_mask_ & bit(i)) throw Error(ErrorKind::InvalidInput, "repeated prefix vertex '" + v + "'");
      prefix_.push_back(i);
      prefix_mask_ |= bit(i);
    }
  }

  SearchResult run() {
    SearchResult res;
    std::vector<Mask> unc(n_);
    for (int v = 0; v < n_; ++v) unc[v] = bg_.adj(v);
    try {
      bool ok = choose_sinks(0, unc);
      res.outcome = ok ? SearchOutcome::Found : SearchOutcome::NotFound;
    } catch (const NodeLimit&) {
      res.outcome = SearchOutcome::BudgetExceeded;
    }
    res.stats = stats_;
    if (res.outcome == SearchOutcome::Found) build_witness(res);
    return res;
  }

 private:
  struct NodeLimit {};

  struct KeyHash {
    std::size_t operator()(const std::vector<Mask>& key) const noexcept {
      std::uint64_t h = 0x9e3779b97f4a7c15ull;
      for (Mask m : key) h ^= m + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  static constexpr std::size_t kMemoCap = 4'000'000;

  void tick() {
    ++stats_.nodes;
    if (budget_.node_limit && stats_.nodes > *budget_.node_limit) throw NodeLimit{};
  }

  // Greedy count of uncovered edges no two of which fit in one clique.
  int packing_bound(const std::vector<Mask>& unc) const {
    std::vector<Mask> chosen;
    for (int a = 0; a < n_; ++a)
      for (Mask rest = unc[a] & bits_above(a); rest; rest &= rest - 1) {
        Mask e = bit(a) | bit(lowest_bit(rest));
        bool compatible = false;
        for (Mask c : chosen)
          if (bg_.is_clique(c | e)) {
            compatible = true;
            break;
          }
        if (!compatible) chosen.push_back(e);
      }
    return static_cast<int>(chosen.size());
  }

  static bool any_uncovered(const std::vector<Mask>& unc) {
    for (Mask m : unc)
      if (m) return true;
    return false;
  }

  // Number of uncovered pairs inside s.
  Mask coverage_count(const std::vector<Mask>& unc, Mask s) const {
    Mask count = 0;
    for (Mask rest = s; rest; rest &= rest - 1) count += popcount(unc[lowest_bit(rest)] & s);
    return count / 2;
  }

  // Is every uncovered pair inside a also inside b?
  bool covers_subset(const std::vector<Mask>& unc, Mask a, Mask b) const {
    for (Mask rest = a; rest; rest &= rest - 1) {
      int i = lowest_bit(rest);
      Mask pairs = unc[i] & a;
      if (pairs && (!(b & bit(i)) || (pairs & ~b))) return false;
    }
    return true;
  }

  // Undominated slot choices inside `within`, largest coverage first; {0} if
  // nothing there is uncovered.
  std::vector<Mask> slot_candidates(const std::vector<Mask>& unc, Mask within) {
    std::vector<std::pair<Mask, Mask>> traces;  // (coverage, clique)
    for (Mask c : cliques_) {
      Mask t = c & within;
      Mask cov = coverage_count(unc, t);
      if (cov) traces.emplace_back(cov, t);
    }
    std::sort(traces.begin(), traces.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    std::vector<Mask> out;
    for (const auto& [cov, t] : traces) {
      bool dominated = false;
      for (Mask kept : out)
        if (covers_subset(unc, t, kept)) {
          dominated = true;
          break;
        }
      if (dominated) {
        ++stats_.dominated_slots;
        continue;
      }
      out.push_back(t);
    }
    if (out.empty()) out.push_back(0);
    return out;
  }

  static void cover(std::vector<Mask>& unc, Mask s) {
    for (Mask rest = s; rest; rest &= rest - 1) unc[lowest_bit(rest)] &= ~s;
  }

  bool choose_sinks(int used, std::vector<Mask>& unc) {
    if (used == k_) return peel(bg_.all(), unc);
    tick();
    for (Mask s : any_uncovered(unc) ? slot_candidates(unc, bg_.all()) : std::vector<Mask>{0}) {
      std::vector<Mask> next = unc;
      cover(next, s);
      sinks_.push_back(s);
      if (choose_sinks(used + 1, next)) return true;
      sinks_.pop_back();
    }
    return false;
  }

  // The vertex to take as last of `remaining`, or -1.
  int next_vertex(Mask remaining, const std::vector<Mask>& unc) const {
    const int r = popcount(remaining);
    if (r <= static_cast<int>(prefix_.size())) {
      int v = prefix_[r - 1];
      return unc[v] ? -1 : v;
    }
    int best = -1;
    for (Mask rest = remaining & ~prefix_mask_; rest; rest &= rest - 1) {
      int v = lowest_bit(rest);
      if (unc[v]) continue;
      // Prefer the vertex with most remaining neighbors: it leaves the
      // smallest cliques unusable for later slots.
      if (best < 0 || popcount(bg_.adj(v) & remaining) > popcount(bg_.adj(best) & remaining)) best = v;
    }
    return best;
  }

  bool peel(Mask remaining, std::vector<Mask>& unc) {
    if (remaining == 0) return true;
    tick();
    const int v = next_vertex(remaining, unc);
    if (v < 0) {
      ++stats_.dead_ends;
      return false;
    }
    const int r = popcount(remaining);
    if (budget_.bound_pruning && packing_bound(unc) > std::max(0, r - 2)) {
      ++stats_.bound_prunes;
      return false;
    }
    std::vector<Mask> key;
    if (budget_.memoization) {
      key = unc;
      key.push_back(remaining);
      if (failed_.count(key)) {
        ++stats_.memo_prunes;
        return false;
      }
    }
    const Mask before = remaining & ~bit(v);
    for (Mask s : any_uncovered(unc) ? slot_candidates(unc, before) : std::vector<Mask>{0}) {
      std::vector<Mask> next = unc;
      cover(next, s);
      trail_.push_back({v, s});
      if (peel(before, next)) return true;
      trail_.pop_back();
    }
    if (budget_.memoization && failed_.size() < kMemoCap) failed_.insert(std::move(key));
    return false;
  }

  void build_witness(SearchResult& res) const {
    Digraph d(g_.vertices());
    std::vector<Vertex> added;
    for (int j = 1; j <= k_; ++j) {
      Vertex z = fresh_sink(d, "z" + std::to_string(j));
      d.add_vertex(z);
      added.push_back(z);
    }
    for (auto it = trail_.rbegin(); it != trail_.rend(); ++it) {
      const auto& [v, s] = *it;
      res.ordering.push_back(bg_.label(v));
      for (Mask rest = s; rest; rest &= rest - 1) d.add_arc(bg_.label(lowest_bit(rest)), bg_.label(v));
    }
    for (std::size_t j = 0; j < sinks_.size(); ++j)
      for (Mask rest = sinks_[j]; rest; rest &= rest - 1)
        d.add_arc(bg_.label(lowest_bit(rest)), added[j]);
    res.ordering.insert(res.ordering.end(), added.begin(), added.end());
    res.added = added;
    res.witness = std::move(d);
  }

  static Vertex fresh_sink(const Digraph& d, const Vertex& stem) {
    Vertex z = stem;
    while (d.has_vertex(z)) z += "'";
    return z;
  }

  const Graph& g_;
  BitGraph bg_;
  int n_;
  int k_;
  SearchBudget budget_;
  std::vector<Mask> cliques_;
  std::vector<int> prefix_;
  Mask prefix_mask_ = 0;
  SearchStats stats_;
  std::unordered_set<std::vector<Mask>, KeyHash> failed_;
  std::vector<std::pair<int, Mask>> trail_;  // (vertex, in-neighborhood), back to front
  std::vector<Mask> sinks_;
};

inline void check_budget(const Graph& g, int k, const SearchBudget& budget) {
  if (static_cast<int>(g.num_vertices()) + k > budget.max_total_vertices)
    throw BudgetExceededError(std::to_string(g.num_vertices()) + " + " + std::to_string(k) +
                                  " vertices exceed the budget of " +
                                  std::to_string(budget.max_total_vertices),
                              0, -1);
}

}  // namespace detail

// Exact: NotFound means no realization with k added vertices exists. The
// witness, when found, has passed verify_realization. `prefix` forces the
// first vertices of the ordering.
inline SearchResult realization_search(const Graph& g, int k, const SearchBudget& budget = {},
                                       const std::vector<Vertex>& prefix = {}) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative k");
  detail::check_budget(g, k, budget);
  SearchResult res = detail::CliqueAssignmentSearch(g, k, budget, prefix).run();
  if (res.witness) detail::self_check(*res.witness, g, k, "realization_search");
  return res;
}

struct CompetitionNumber {
  int k = 0;
  int lower_bound = 0;  // neighborhood clique-cover bound the search started from
  Digraph witness;
  std::vector<Vertex> added;
  std::vector<Vertex> ordering;
  SearchStats stats;
};

inline CompetitionNumber competition_number(const Graph& g, const SearchBudget& budget = {}) {
  CompetitionNumber out;
  if (g.num_vertices() == 0) return out;
  out.lower_bound = budget.start_at_lower_bound ? opsut_lower_bound(g, BitGraph::kMaxVertices) : 0;
  for (int k = out.lower_bound; k <= budget.max_k; ++k) {
    // Every smaller k has been refuted, so k is a lower bound when we stop here.
    if (static_cast<int>(g.num_vertices()) + k > budget.max_total_vertices)
      throw BudgetExceededError(std::to_string(g.num_vertices()) + " + " + std::to_string(k) +
                                    " vertices exceed the budget of " +
                                    std::to_string(budget.max_total_vertices),
                                k, -1);
    SearchResult res = realization_search(g, k, budget);
    out.stats += res.stats;
    if (res.outcome == SearchOutcome::BudgetExceeded)
      throw BudgetExceededError("node limit hit while testing k = " + std::to_string(k), k, -1);
    if (res.outcome == SearchOutcome::Found) {
      out.k = k;
      out.witness = std::move(*res.witness);
      out.added = std::move(res.added);
      out.ordering = std::move(res.ordering);
      return out;
    }
  }
  throw BudgetExceededError("k(G) exceeds max_k = " + std::to_string(budget.max_k),
                            budget.max_k + 1, -1);
}

// All top-twos of G, each with a witness whose ordering starts with the pair.
inline std::vector<TopTwo> top_two_search(const Graph& g, const SearchBudget& budget = {}) {
  if (g.num_vertices() < 2) throw Error(ErrorKind::InvalidInput, "top-two needs two vertices");
  const int k = competition_number(g, budget).k;
  std::vector<TopTwo> out;
  const std::vector<Vertex> vs(g.vertices().begin(), g.vertices().end());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      for (const auto& prefix : {std::vector<Vertex>{vs[i], vs[j]}, std::vector<Vertex>{vs[j], vs[i]}}) {
        SearchResult res = realization_search(g, k, budget, prefix);
        if (res.outcome == SearchOutcome::BudgetExceeded)
          throw BudgetExceededError("node limit hit in top-two search", k, k);
        if (res.outcome != SearchOutcome::Found) continue;
        RealizationCertificate cert = verify_realization(*res.witness, g, k);
        cert.ordering = AcyclicOrdering(res.ordering);
        out.push_back(TopTwo{vs[i], vs[j], std::move(cert)});
        break;
      }
    }
  return out;
}

}  // namespace compnum
