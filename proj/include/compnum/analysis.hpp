#pragma once

// Necessary and sufficient conditions for k(L(H,f)) = 1, pendant-vertex
// reduction, and a classifier that only reports what it can certify.

#include <optional>
#include <string>
#include <vector>

#include "compnum/cliques.hpp"
#include "compnum/glg.hpp"
#include "compnum/oracle.hpp"
#include "compnum/realization.hpp"

namespace compnum {

struct Hypotheses {
  bool connected = false;
  bool has_edge = false;
  bool nonzero_f = false;
};

struct ConditionReport {
  bool thm27_i = false;                  // some f(v) = 1
  bool thm27_ii = false;                 // some f(v) = 0 with a simplicial vertex of L(H,f) in K_H(v)
  std::optional<Vertex> thm27_i_vertex;  // witnesses
  std::optional<Vertex> thm27_ii_vertex;
  std::optional<Edge> thm29_i;  // edge uv with f(u) = f(v) = 1
  bool thm29_ii = false;        // max f <= 1
  Hypotheses hypotheses;
};

inline ConditionReport check_conditions(const VertexWeightedGraph& w) {
  const Graph& h = w.graph();
  ConditionReport r;
  r.hypotheses = {is_connected(h), h.num_edges() > 0, !w.is_zero()};
  for (const auto& [v, f] : w.weights())
    if (f == 1) {
      r.thm27_i = true;
      r.thm27_i_vertex = v;
      break;
    }
  const Graph g = generalized_line_graph(w).graph;
  const VertexSet simplicial = simplicial_vertices(g);
  for (const auto& [v, f] : w.weights()) {
    if (f != 0) continue;
    const Clique k = incident_edge_clique(h, v);
    if (std::any_of(k.begin(), k.end(), [&](const Vertex& x) { return simplicial.count(x) > 0; })) {
      r.thm27_ii = true;
      r.thm27_ii_vertex = v;
      break;
    }
  }
  r.thm29_i = detail::unit_weight_edge(w);
  r.thm29_ii = w.max_weight() <= 1;
  return r;
}

// Contrapositive use: false means k(G) >= 2.
inline bool lemma_2_6_holds(const Graph& g) {
  return !simplicial_vertices(g).empty() || !isolated_vertices(g).empty();
}

enum class PendantOrder {
  LargestLabelFirst,  // removes cocktail-block vertices ("q:...") before edge vertices
  SmallestLabelFirst,
};

struct PendantReduction {
  Graph graph;
  std::vector<Vertex> deleted;  // in deletion order
  bool stopped_at_floor = false;
};

// Deletes degree-1 vertices one at a time while more than 2 vertices remain.
inline PendantReduction pendant_reduce(const Graph& g,
                                       PendantOrder order = PendantOrder::LargestLabelFirst) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "pendant reduction needs a connected graph");
  PendantReduction out{g, {}, false};
  while (true) {
    std::optional<Vertex> pick;
    for (const auto& v : out.graph.vertices()) {
      if (out.graph.degree(v) != 1) continue;
      if (!pick || order == PendantOrder::LargestLabelFirst) pick = v;
      if (order == PendantOrder::SmallestLabelFirst) break;
    }
    if (!pick) break;
    if (out.graph.num_vertices() <= 2) {
      out.stopped_at_floor = true;
      break;
    }
    out.graph.remove_vertex(*pick);
    out.deleted.push_back(*pick);
  }
  return out;
}

enum class KValue { ExactlyZero, ExactlyOne, ExactlyTwo, AtMostTwoUndetermined };

inline const char* to_string(KValue v) {
  switch (v) {
    case KValue::ExactlyZero: return "exactly-zero";
    case KValue::ExactlyOne: return "exactly-one";
    case KValue::ExactlyTwo: return "exactly-two";
    case KValue::AtMostTwoUndetermined: return "at-most-two-undetermined";
  }
  return "?";
}

enum class EvidenceSource {
  Theorem11,
  Theorem29Construction,
  Lemma26,
  Oracle,
  Theorem12Bound,
  ExampleFixture,
};

inline const char* to_string(EvidenceSource s) {
  switch (s) {
    case EvidenceSource::Theorem11: return "theorem-1.1";
    case EvidenceSource::Theorem29Construction: return "theorem-2.9-construction";
    case EvidenceSource::Lemma26: return "lemma-2.6";
    case EvidenceSource::Oracle: return "oracle";
    case EvidenceSource::Theorem12Bound: return "theorem-1.2-bound";
    case EvidenceSource::ExampleFixture: return "example-fixture";
  }
  return "?";
}

struct Evidence {
  std::string claim;
  EvidenceSource source;
  std::optional<RealizationCertificate> certificate;
  std::optional<PendantReduction> reduction;  // the graph the simplicial/isolated test was applied to
  std::optional<SearchStats> search;          // exhaustive search that produced the claim
};

struct Verdict {
  KValue k_value = KValue::AtMostTwoUndetermined;
  std::vector<Evidence> evidence;
  ConditionReport conditions;
};

namespace detail {

inline Evidence upper_bound_two(const VertexWeightedGraph& w) {
  const auto [u, v] = *w.graph().edges().begin();
  return {"k <= 2", EvidenceSource::Theorem12Bound, glg_realization(w, u, v).certificate, {}, {}};
}

// Exact k = 1 test by search; nullopt when over budget.
inline std::optional<Evidence> oracle_k1(const Graph& g, const SearchBudget& budget) {
  try {
    SearchResult res = realization_search(g, 1, budget);
    if (res.outcome == SearchOutcome::BudgetExceeded) return std::nullopt;
    if (res.outcome == SearchOutcome::Found)
      return Evidence{"k = 1", EvidenceSource::Oracle, verify_realization(*res.witness, g, 1), {},
                      res.stats};
    return Evidence{"no realization with 1 added vertex", EvidenceSource::Oracle, {}, {}, res.stats};
  } catch (const BudgetExceededError&) {
    return std::nullopt;
  }
}

}  // namespace detail

// H must be connected with an edge. k >= 1 always holds except for L(K_2) = K_1.
inline Verdict classify(const VertexWeightedGraph& w, const SearchBudget& budget = {}) {
  Verdict out;
  out.conditions = check_conditions(w);
  if (!out.conditions.hypotheses.has_edge) throw Error(ErrorKind::HypothesisNotMet, "H has no edge");
  if (!out.conditions.hypotheses.connected) throw Error(ErrorKind::HypothesisNotMet, "H is not connected");
  const Graph g = generalized_line_graph(w).graph;

  if (g.num_vertices() == 1) {
    out.k_value = KValue::ExactlyZero;
    out.evidence.push_back({"k = 0", EvidenceSource::Theorem11,
                            verify_realization(Digraph(g.vertices()), g, 0), {}, {}});
    return out;
  }

  if (w.is_zero()) {
    if (!lemma_2_6_holds(g)) {
      out.k_value = KValue::ExactlyTwo;
      out.evidence.push_back({"no simplicial or isolated vertex, so k >= 2", EvidenceSource::Lemma26,
                              {}, PendantReduction{g, {}, false}, {}});
      out.evidence.push_back(detail::upper_bound_two(w));
      return out;
    }
    out.evidence.push_back({"line graph with a simplicial vertex, so k <= 1", EvidenceSource::Theorem11,
                            {}, {}, {}});
    if (auto ev = detail::oracle_k1(g, budget); ev && ev->certificate) {
      out.k_value = KValue::ExactlyOne;
      out.evidence.push_back(std::move(*ev));
      return out;
    }
    out.evidence.push_back(detail::upper_bound_two(w));
    return out;
  }

  if (out.conditions.thm29_i) {
    out.k_value = KValue::ExactlyOne;
    out.evidence.push_back({"k = 1", EvidenceSource::Theorem29Construction,
                            k1_realization_case_i(w, out.conditions.thm29_i), {}, {}});
    return out;
  }
  if (out.conditions.thm29_ii) {
    out.k_value = KValue::ExactlyOne;
    out.evidence.push_back(
        {"k = 1", EvidenceSource::Theorem29Construction, k1_realization_case_ii(w), {}, {}});
    return out;
  }

  PendantReduction red = pendant_reduce(g);
  if (!lemma_2_6_holds(red.graph)) {
    out.k_value = KValue::ExactlyTwo;
    out.evidence.push_back({"pendant-reduced graph has no simplicial or isolated vertex, so k >= 2",
                            EvidenceSource::Lemma26, {}, std::move(red), {}});
    out.evidence.push_back(detail::upper_bound_two(w));
    return out;
  }

  if (auto ev = detail::oracle_k1(g, budget)) {
    const bool found = ev->certificate.has_value();
    out.evidence.push_back(std::move(*ev));
    if (found) {
      out.k_value = KValue::ExactlyOne;
      return out;
    }
    out.k_value = KValue::ExactlyTwo;
    out.evidence.push_back(detail::upper_bound_two(w));
    return out;
  }
  out.evidence.push_back(detail::upper_bound_two(w));
  return out;
}

}  // namespace compnum
