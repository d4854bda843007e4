#pragma once

// Acyclic digraphs D with C(D) = G ∪ I_k: the verifier every construction
// runs through, the normalization and composition steps, and the explicit
// constructions for line graphs, cocktail party graphs and generalized line
// graphs.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "compnum/cliques.hpp"
#include "compnum/glg.hpp"
#include "compnum/graph.hpp"

namespace compnum {

/// Proof that C(D) = G ∪ I_k for an acyclic D.
struct RealizationCertificate {
  Digraph digraph;
  Graph base;
  int k = 0;
  std::vector<Vertex> added;  // V(D) \ V(G), sorted
  AcyclicOrdering ordering;
  Graph recomputed;  // competition_graph(digraph)
  // Identifications applied while building D: construction-internal name -> final label.
  std::map<Vertex, Vertex> relabeling;
};

class CompetitionMismatchError : public Error {
 public:
  CompetitionMismatchError(std::string what, std::vector<Edge> missing, std::vector<Edge> extra,
                           std::vector<Vertex> non_isolated)
      : Error(ErrorKind::CompetitionMismatch, describe(what, missing, extra, non_isolated)),
        missing_(std::move(missing)),
        extra_(std::move(extra)),
        non_isolated_(std::move(non_isolated)) {}

  // Edges of G absent from C(D).
  const std::vector<Edge>& missing() const noexcept { return missing_; }
  // Edges of C(D) not in G (including any touching an added vertex).
  const std::vector<Edge>& extra() const noexcept { return extra_; }
  const std::vector<Vertex>& non_isolated() const noexcept { return non_isolated_; }

 private:
  static std::string describe(const std::string& what, const std::vector<Edge>& missing,
                              const std::vector<Edge>& extra,
                              const std::vector<Vertex>& non_isolated) {
    std::string s = what;
    if (!missing.empty()) s += "; " + std::to_string(missing.size()) + " missing edge(s)";
    if (!extra.empty()) s += "; " + std::to_string(extra.size()) + " extra edge(s)";
    if (!non_isolated.empty())
      s += "; " + std::to_string(non_isolated.size()) + " non-isolated added vertex(es)";
    return s;
  }

  std::vector<Edge> missing_;
  std::vector<Edge> extra_;
  std::vector<Vertex> non_isolated_;
};

inline RealizationCertificate verify_realization(const Digraph& d, const Graph& g, int k) {
  for (const auto& v : g.vertices())
    if (!d.has_vertex(v))
      throw CompetitionMismatchError("vertex '" + v + "' of G missing from D", {}, {}, {});
  if (k < 0 || d.num_vertices() != g.num_vertices() + static_cast<std::size_t>(k))
    throw CompetitionMismatchError("D has " + std::to_string(d.num_vertices()) +
                                       " vertices, expected |V(G)| + k = " +
                                       std::to_string(g.num_vertices() + std::max(k, 0)),
                                   {}, {}, {});

  RealizationCertificate cert;
  cert.ordering = acyclic_ordering(d);
  cert.recomputed = competition_graph(d);
  for (const auto& v : d.vertices())
    if (!g.has_vertex(v)) cert.added.push_back(v);

  std::vector<Edge> missing, extra;
  std::vector<Vertex> non_isolated;
  std::set_difference(g.edges().begin(), g.edges().end(), cert.recomputed.edges().begin(),
                      cert.recomputed.edges().end(), std::back_inserter(missing));
  std::set_difference(cert.recomputed.edges().begin(), cert.recomputed.edges().end(),
                      g.edges().begin(), g.edges().end(), std::back_inserter(extra));
  for (const auto& z : cert.added)
    if (cert.recomputed.degree(z) > 0) non_isolated.push_back(z);
  if (!missing.empty() || !extra.empty())
    throw CompetitionMismatchError("C(D) differs from G ∪ I_k", std::move(missing),
                                   std::move(extra), std::move(non_isolated));

  cert.digraph = d;
  cert.base = g;
  cert.k = k;
  return cert;
}

inline bool realizes(const Digraph& d, const Graph& g, int k) {
  try {
    verify_realization(d, g, k);
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace detail {

// Re-verify constructed output; a failure here is a bug, never a result.
inline RealizationCertificate self_check(const Digraph& d, const Graph& g, int k,
                                         const char* construction) {
  try {
    return verify_realization(d, g, k);
  } catch (const Error& err) {
    throw Error(ErrorKind::InternalInvariant,
                std::string(construction) + " produced an invalid realization: " + err.what());
  }
}

inline Vertex fresh_label(const Digraph& d, const Graph& g, const std::string& stem) {
  for (int i = 0;; ++i) {
    Vertex cand = i ? stem + "'" + std::to_string(i) : stem;
    if (!d.has_vertex(cand) && !g.has_vertex(cand)) return cand;
  }
}

}  // namespace detail

// Drops arcs leaving added vertices, orders V(G) before the added vertices,
// and makes the first two vertices in-neighbor free.
inline RealizationCertificate normalize_realization(const Digraph& d1, const Graph& g, int k) {
  RealizationCertificate in;
  try {
    in = verify_realization(d1, g, k);
  } catch (const Error& err) {
    throw Error(ErrorKind::InvalidInput, std::string("not a realization: ") + err.what());
  }
  if (g.num_vertices() < 2) throw Error(ErrorKind::InvalidInput, "G needs at least two vertices");

  Digraph d = d1;
  for (const auto& z : in.added)
    for (const auto& w : VertexSet(d.out_neighbors(z))) d.remove_arc(z, w);

  auto real_first = [&](const Vertex& a, const Vertex& b) {
    bool aa = !g.has_vertex(a), ba = !g.has_vertex(b);
    return aa != ba ? ba : a < b;
  };
  AcyclicOrdering order = acyclic_ordering(d, real_first);
  const Vertex& v1 = order[0];
  const Vertex& v2 = order[1];
  if (d.in_neighbors(v2) == VertexSet{v1}) d.remove_arc(v1, v2);

  RealizationCertificate out = detail::self_check(d, g, k, "normalize_realization");
  out.ordering = order;
  out.relabeling = in.relabeling;
  return out;
}

/// A top-two {first, second} of a graph, with a witness whose ordering starts
/// with them. Edgeless graphs need no witness.
struct TopTwo {
  Vertex first;
  Vertex second;
  std::optional<RealizationCertificate> witness;
};

struct ComposeResult {
  Digraph digraph;
  std::vector<Vertex> added;
  AcyclicOrdering ordering;  // first |V(G)| + 2 entries induce D'
};

// Builds D realizing (G ⋉_K H) ∪ I_2 (H edgeless) or (G ⋉_K H) ∪ I_{k(H)}
// (H without isolated vertices) from D' realizing G ∪ {u1, u2}, where
// {u1, u2} is the given top-two of H. `new_added` names the two fresh sinks
// of the edgeless branch.
inline ComposeResult compose_realization(const Digraph& dprime, const Graph& g, const Clique& k,
                                         const Graph& h, const TopTwo& top,
                                         std::pair<Vertex, Vertex> new_added = {"z1", "z2"}) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::PreconditionViolated, why); };
  if (h.num_vertices() < 2) fail("H needs at least two vertices");
  for (const auto& v : h.vertices())
    if (g.has_vertex(v)) fail("V(G) and V(H) intersect at '" + v + "'");
  if (!is_clique(g, k)) fail("K is not a clique of G");
  if (top.first == top.second || !h.has_vertex(top.first) || !h.has_vertex(top.second))
    fail("top-two must be two distinct vertices of H");
  const bool edgeless = h.num_edges() == 0;
  if (!edgeless && !isolated_vertices(h).empty())
    fail("H must be edgeless or free of isolated vertices");

  RealizationCertificate prior;
  try {
    prior = verify_realization(dprime, g, 2);
  } catch (const Error& err) {
    fail(std::string("D' does not realize G ∪ {u1,u2}: ") + err.what());
  }
  if (prior.added != std::vector<Vertex>{std::min(top.first, top.second),
                                         std::max(top.first, top.second)})
    fail("the vertices added by D' must be the top-two of H");

  // Ordering of D' with V(G) first and the top-two last.
  auto prefix_order = [&]() {
    auto real_first = [&](const Vertex& a, const Vertex& b) {
      bool aa = !g.has_vertex(a), ba = !g.has_vertex(b);
      return aa != ba ? ba : a < b;
    };
    return acyclic_ordering(dprime, real_first).sequence();
  };

  ComposeResult out;
  out.digraph = dprime;
  std::vector<Vertex> seq = prefix_order();

  if (edgeless) {
    std::vector<Vertex> u{top.first, top.second};
    for (const auto& v : h.vertices())
      if (v != top.first && v != top.second) u.push_back(v);
    for (const auto& z : {new_added.first, new_added.second})
      if (g.has_vertex(z) || h.has_vertex(z)) fail("fresh label '" + z + "' is in use");
    u.push_back(new_added.first);
    u.push_back(new_added.second);
    for (std::size_t i = 2; i < u.size(); ++i) out.digraph.add_vertex(u[i]);
    for (std::size_t i = 0; i + 2 < u.size(); ++i) {
      for (const auto& x : k) out.digraph.add_arc(x, u[i + 2]);
      out.digraph.add_arc(u[i], u[i + 2]);
    }
    seq.insert(seq.end(), u.begin() + 2, u.end());
    out.added = {new_added.first, new_added.second};
  } else {
    if (!top.witness) fail("H has edges, so the top-two needs a witness realization");
    const RealizationCertificate& w = *top.witness;
    if (!(w.base == h)) fail("top-two witness realizes a different graph");
    if (w.ordering.size() < 2 ||
        !((w.ordering[0] == top.first && w.ordering[1] == top.second) ||
          (w.ordering[0] == top.second && w.ordering[1] == top.first)))
      fail("top-two witness ordering does not start with the top-two");
    if (!w.digraph.in_neighbors(top.first).empty() || !w.digraph.in_neighbors(top.second).empty())
      fail("top-two vertices must have empty in-neighborhoods in the witness");
    for (const auto& z : w.added)
      if (g.has_vertex(z) || dprime.has_vertex(z)) fail("witness sink '" + z + "' collides with D'");

    const Digraph& d2 = w.digraph;
    for (const auto& v : d2.vertices()) out.digraph.add_vertex(v);
    for (const auto& [a, b] : d2.arcs()) out.digraph.add_arc(a, b);
    for (const auto& v : d2.vertices()) {
      if (v == top.first || v == top.second) continue;
      for (const auto& x : k) out.digraph.add_arc(x, v);
    }
    for (const auto& v : w.ordering.sequence())
      if (v != top.first && v != top.second) seq.push_back(v);
    out.added = w.added;
  }

  out.ordering = AcyclicOrdering(seq);
  if (!out.ordering.validates(out.digraph))
    throw Error(ErrorKind::InternalInvariant, "compose_realization ordering is not acyclic");
  detail::self_check(out.digraph, semi_join(g, k, h), static_cast<int>(out.added.size()),
                     "compose_realization");
  return out;
}

/// A realization with two designated vertices whose in-neighborhoods are
/// K_H(u) and K_H(v).
struct DesignatedRealization {
  RealizationCertificate certificate;
  Vertex z1;
  Vertex z2;
};

namespace detail {

inline std::size_t component_edge_count(const Graph& h, const VertexSet& comp) {
  std::size_t twice = 0;
  for (const auto& v : comp) twice += h.degree(v);
  return twice / 2;
}

inline Graph without_edge(Graph h, const Vertex& a, const Vertex& b) {
  h.remove_edge(a, b);
  return h;
}

class LineGraphRealizer {
 public:
  // D on V(L(h)) ∪ {z1, z2} with N^-(z1) = K_h(u), N^-(z2) = K_h(v).
  Digraph realize(const Graph& h, const Vertex& u, const Vertex& v, const Vertex& z1,
                  const Vertex& z2) const {
    VertexSet main_comp;
    std::vector<VertexSet> others;
    for (auto& comp : connected_components(h)) {
      if (comp.count(u))
        main_comp = std::move(comp);
      else if (component_edge_count(h, comp) > 0)
        others.push_back(std::move(comp));
    }
    Digraph d = realize_connected(h.induced(main_comp), u, v, z1, z2);
    if (others.empty()) return d;

    // Every other component with >= 2 edges needs two sinks; they are merged
    // into real vertices of in-degree zero, whose count never drops below two
    // once a normalized component has been placed.
    Graph line_so_far = line_graph(h.induced(main_comp)).graph;
    std::vector<VertexSet> big;
    for (const auto& comp : others) {
      Graph hc = h.induced(comp);
      if (hc.num_edges() == 1) {
        d.add_vertex(edge_label(*hc.edges().begin()));
        line_so_far.add_vertex(edge_label(*hc.edges().begin()));
      } else {
        big.push_back(comp);
      }
    }
    for (const auto& comp : big) {
      std::vector<Vertex> sources = real_sources(d, line_so_far);
      if (sources.size() < 2 && line_so_far.num_vertices() >= 2) {
        d = normalize_realization(d, line_so_far, 2).digraph;
        sources = real_sources(d, line_so_far);
      }
      if (sources.size() < 2)
        throw Error(ErrorKind::PreconditionViolated,
                    "the component of the chosen edge has a single edge, so no two sinks are "
                    "available for the other components");
      Graph hc = h.induced(comp);
      const Edge& first = *hc.edges().begin();
      Graph lc = line_graph(hc).graph;
      Digraph dc = realize_connected(hc, first.first, first.second, "~a", "~b");
      dc = normalize_realization(dc, lc, 2).digraph;
      dc.rename_vertex("~a", sources[0]);
      dc.rename_vertex("~b", sources[1]);
      for (const auto& x : dc.vertices()) d.add_vertex(x);
      for (const auto& [a, b] : dc.arcs()) d.add_arc(a, b);
      for (const auto& x : lc.vertices()) line_so_far.add_vertex(x);
      for (const auto& [a, b] : lc.edges()) line_so_far.add_edge(a, b);
    }
    return d;
  }

 private:
  static std::vector<Vertex> real_sources(const Digraph& d, const Graph& real) {
    std::vector<Vertex> out;
    for (const auto& x : real.vertices())
      if (d.in_neighbors(x).empty()) out.push_back(x);
    return out;
  }

  // Smallest e' = uw (w != v). When e is a bridge whose u side would be a
  // single edge while the v side has two or more, the v side's sinks could
  // not be merged anywhere, so the u side is rejected.
  static std::optional<Vertex> pick_partner(const Graph& h, const Vertex& u, const Vertex& v) {
    Graph rest = without_edge(h, u, v);
    if (rest.degree(u) == 0) return std::nullopt;
    auto comps = connected_components(rest);
    auto comp_of = [&](const Vertex& x) -> const VertexSet& {
      for (const auto& c : comps)
        if (c.count(x)) return c;
      throw Error(ErrorKind::InternalInvariant, "vertex without component");
    };
    const VertexSet& cu = comp_of(u);
    if (!cu.count(v) && component_edge_count(rest, cu) < 2 &&
        component_edge_count(rest, comp_of(v)) >= 2)
      return std::nullopt;
    return *rest.neighbors(u).begin();
  }

  Digraph realize_connected(const Graph& h, const Vertex& u, const Vertex& v, const Vertex& z1,
                            const Vertex& z2) const {
    const Vertex e = edge_label(u, v);
    if (h.num_edges() == 1) {
      Digraph d{{e, z1, z2}, {{e, z1}, {e, z2}}};
      return d;
    }
    std::optional<Vertex> w = pick_partner(h, u, v);
    if (!w) {
      // The partner edge sits at v; swap the roles of the endpoints.
      if (!pick_partner(h, v, u))
        throw Error(ErrorKind::InternalInvariant, "no edge adjacent to " + e);
      return realize_connected(h, v, u, z2, z1);
    }
    // Induction: D' realizes L(H - e) ∪ {z1, e} with N^-(z1) = K_{H-e}(u)
    // and N^-(e) = K_{H-e}(w).
    Graph rest = without_edge(h, u, v);
    Digraph d = realize(rest, u, *w, z1, e);
    d.add_vertex(z2);
    d.add_arc(e, z1);
    for (const auto& x : incident_edge_clique(h, v)) d.add_arc(x, z2);
    return d;
  }
};

}  // namespace detail

// Zero-weight case: C(D) = L(H) ∪ {z1, z2}, N^-(z1) = K_H(u), N^-(z2) = K_H(v).
inline DesignatedRealization line_graph_realization(const Graph& h, const Vertex& u,
                                                    const Vertex& v, const Vertex& z1 = "z1",
                                                    const Vertex& z2 = "z2") {
  if (!h.has_edge(u, v)) throw Error(ErrorKind::NotAnEdge, u + "-" + v + " is not an edge of H");
  Graph lh = line_graph(h).graph;
  if (lh.has_vertex(z1) || lh.has_vertex(z2) || z1 == z2)
    throw Error(ErrorKind::VertexCollision, "added labels collide with L(H)");
  Digraph d = detail::LineGraphRealizer{}.realize(h, u, v, z1, z2);
  DesignatedRealization out{detail::self_check(d, lh, 2, "line_graph_realization"), z1, z2};
  if (d.in_neighbors(z1) != incident_edge_clique(h, u) ||
      d.in_neighbors(z2) != incident_edge_clique(h, v))
    throw Error(ErrorKind::InternalInvariant, "line_graph_realization in-neighborhoods drifted");
  return out;
}

struct CpRealization {
  RealizationCertificate certificate;  // realizes CP(m) ∪ I_2
  TopTwo top_two;
};

// CP(m) ∪ I_2. For m >= 2 the in-neighborhoods along x_1..x_m, y_1..y_m, a, b are
//   y_1 <- {x_1..x_m},  y_{j+1} <- {y_j} ∪ {x_i : i != j},
//   a <- {y_1..y_m},    b <- {y_m} ∪ {x_i : i != m},
// followed by normalization so the top-two has empty in-neighborhoods.
inline CpRealization cp_realization(int m, const Vertex& anchor = "",
                                    std::pair<Vertex, Vertex> added = {"z1", "z2"}) {
  LabeledGraph cp = cocktail_party(m, anchor);
  auto x = [&](int i) { return cocktail_label(anchor, i, Side::X); };
  auto y = [&](int i) { return cocktail_label(anchor, i, Side::Y); };
  Digraph d(cp.graph.vertices());
  d.add_vertex(added.first);
  d.add_vertex(added.second);
  CpRealization out;
  if (m == 1) {
    out.certificate = detail::self_check(d, cp.graph, 2, "cp_realization");
    out.top_two = TopTwo{x(1), y(1), out.certificate};
    return out;
  }
  for (int i = 1; i <= m; ++i) d.add_arc(x(i), y(1));
  for (int j = 1; j < m; ++j) {
    d.add_arc(y(j), y(j + 1));
    for (int i = 1; i <= m; ++i)
      if (i != j) d.add_arc(x(i), y(j + 1));
  }
  for (int i = 1; i <= m; ++i) d.add_arc(y(i), added.first);
  d.add_arc(y(m), added.second);
  for (int i = 1; i < m; ++i) d.add_arc(x(i), added.second);

  out.certificate = normalize_realization(d, cp.graph, 2);
  const auto& order = out.certificate.ordering;
  out.top_two = TopTwo{order[0], order[1], out.certificate};
  return out;
}

namespace detail {

inline void rename_all(Digraph& d, const std::map<Vertex, Vertex>& names) {
  // Two passes through placeholders so swaps cannot collide.
  std::map<Vertex, Vertex> staged;
  for (const auto& [from, to] : names) {
    if (from == to) continue;
    Vertex tmp = "~rename~" + from;
    d.rename_vertex(from, tmp);
    staged.emplace(tmp, to);
  }
  for (const auto& [tmp, to] : staged) d.rename_vertex(tmp, to);
}

}  // namespace detail

// C(D) = L(H,f) ∪ I_2. The line-graph realization's two sinks are identified
// with a top-two of Q_{v_1}; each Q_{v_i} is then attached by
// compose_realization, whose fresh sinks become the top-two of Q_{v_{i+1}}.
// z1, z2 of the result are the identified vertices, with N^-(z1) = K_H(u)
// and N^-(z2) = K_H(v); for f ≡ 0 they are the added vertices themselves.
inline DesignatedRealization glg_realization(const VertexWeightedGraph& w, const Vertex& u,
                                             const Vertex& v) {
  const Graph& h = w.graph();
  if (!h.has_edge(u, v)) throw Error(ErrorKind::NotAnEdge, u + "-" + v + " is not an edge of H");
  if (w.is_zero()) return line_graph_realization(h, u, v);

  const std::vector<Vertex> support = w.support();
  auto top_two_of = [&](std::size_t i) {
    const Vertex& anchor = support[i];
    int m = w.weight(anchor);
    return cp_realization(m, anchor, {"z:" + std::to_string(i + 1) + ":a",
                                      "z:" + std::to_string(i + 1) + ":b"})
        .top_two;
  };

  TopTwo top = top_two_of(0);
  const Vertex z1 = top.first, z2 = top.second;
  std::map<Vertex, Vertex> relabeling{{"z1", z1}, {"z2", z2}};

  std::vector<Graph> chain = semi_join_chain(w);
  Digraph d = line_graph_realization(h, u, v, z1, z2).certificate.digraph;
  std::vector<Vertex> sinks;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const Vertex& anchor = support[i];
    Graph q = cocktail_party(w.weight(anchor), anchor).graph;
    std::pair<Vertex, Vertex> fresh{"z:" + std::to_string(i + 1) + ":a",
                                    "z:" + std::to_string(i + 1) + ":b"};
    ComposeResult step =
        compose_realization(d, chain[i], incident_edge_clique(h, anchor), q, top, fresh);
    d = std::move(step.digraph);
    sinks = step.added;
    if (i + 1 < support.size()) {
      top = top_two_of(i + 1);
      detail::rename_all(d, {{sinks[0], top.first}, {sinks[1], top.second}});
      relabeling[sinks[0]] = top.first;
      relabeling[sinks[1]] = top.second;
    }
  }
  detail::rename_all(d, {{sinks[0], "z1"}, {sinks[1], "z2"}});

  DesignatedRealization out{
      detail::self_check(d, generalized_line_graph(w).graph, 2, "glg_realization"), z1, z2};
  out.certificate.relabeling = relabeling;
  if (d.in_neighbors(z1) != incident_edge_clique(h, u) ||
      d.in_neighbors(z2) != incident_edge_clique(h, v))
    throw Error(ErrorKind::InternalInvariant, "glg_realization in-neighborhoods drifted");
  return out;
}

namespace detail {

inline void require_k1_hypotheses(const VertexWeightedGraph& w) {
  const Graph& h = w.graph();
  if (h.num_edges() == 0) throw Error(ErrorKind::HypothesisNotMet, "H has no edge");
  if (!is_connected(h)) throw Error(ErrorKind::HypothesisNotMet, "H is not connected");
  if (w.is_zero()) throw Error(ErrorKind::HypothesisNotMet, "f is the zero function");
}

// An edge uv with f(u) = f(v) = 1, smallest first.
inline std::optional<Edge> unit_weight_edge(const VertexWeightedGraph& w) {
  for (const auto& [a, b] : w.graph().edges())
    if (w.weight(a) == 1 && w.weight(b) == 1) return Edge{a, b};
  return std::nullopt;
}

}  // namespace detail

// k = 1 when f(u) = f(v) = 1 on an edge uv. With f zero elsewhere this is the
// textbook chain on top of the line-graph realization whose sinks are q_v
// and z. Otherwise any realization of L(H - uv, f_0) ∪ I_2 is taken, its two
// sinks are merged into uv and q_v, and Q_v, Q_u are threaded into one sink:
//   q'_v <- K(v) + q_v,  q_u <- K(v) + q'_v,  q'_u <- K(u) + q_u,  z <- K(u) + q'_u.
inline RealizationCertificate k1_realization_case_i(const VertexWeightedGraph& w,
                                                    std::optional<Edge> edge = std::nullopt) {
  detail::require_k1_hypotheses(w);
  const Graph& h = w.graph();
  if (!edge) edge = detail::unit_weight_edge(w);
  if (!edge) throw Error(ErrorKind::HypothesisNotMet, "no edge uv with f(u) = f(v) = 1");
  const auto [u, v] = *edge;
  if (!h.has_edge(u, v)) throw Error(ErrorKind::NotAnEdge, u + "-" + v + " is not an edge of H");
  if (w.weight(u) != 1 || w.weight(v) != 1)
    throw Error(ErrorKind::HypothesisNotMet, "f(" + u + ") and f(" + v + ") must both be 1");

  const Vertex qu = cocktail_label(u, 1, Side::X), qu2 = cocktail_label(u, 1, Side::Y);
  const Vertex qv = cocktail_label(v, 1, Side::X), qv2 = cocktail_label(v, 1, Side::Y);
  const Vertex z = "z";
  const Clique ku = incident_edge_clique(h, u), kv = incident_edge_clique(h, v);
  const VertexWeightedGraph rest_weights = w.with_weight(u, 0).with_weight(v, 0);
  const Graph target = generalized_line_graph(w).graph;

  Digraph d;
  std::map<Vertex, Vertex> relabeling;
  if (rest_weights.is_zero()) {
    d = line_graph_realization(h, u, v, qv, z).certificate.digraph;
    relabeling = {{"z1", qv}, {"z2", z}};
    for (const auto& x : {qu, qu2, qv2}) d.add_vertex(x);
    d.add_arc(qu, qu2);
    d.add_arc(qu2, qv);
    d.add_arc(qv, qv2);
    d.add_arc(qv2, z);
    for (const auto& x : ku) d.add_arc(x, qu2);
    for (const auto& x : kv) d.add_arc(x, qv2);
  } else {
    const Vertex e = edge_label(u, v);
    const VertexWeightedGraph reduced(detail::without_edge(h, u, v), rest_weights.weights());
    const Graph& hr = reduced.graph();
    if (hr.num_edges() == 0) {
      throw Error(ErrorKind::InternalInvariant, "positive weight off a connected H's only edge");
    }
    // Prefer an edge in a largest component so the other components' sinks can be merged.
    std::optional<Edge> anchor;
    std::size_t best = 0;
    for (const auto& comp : connected_components(hr)) {
      std::size_t m = detail::component_edge_count(hr, comp);
      if (m > best) {
        best = m;
        anchor = *hr.induced(comp).edges().begin();
      }
    }
    d = glg_realization(reduced, anchor->first, anchor->second).certificate.digraph;
    detail::rename_all(d, {{"z1", e}, {"z2", qv}});
    relabeling = {{"z1", e}, {"z2", qv}};
    for (const auto& x : {qv2, qu, qu2, z}) d.add_vertex(x);
    for (const auto& x : kv) {
      d.add_arc(x, qv2);
      d.add_arc(x, qu);
    }
    d.add_arc(qv, qv2);
    d.add_arc(qv2, qu);
    for (const auto& x : ku) {
      d.add_arc(x, qu2);
      d.add_arc(x, z);
    }
    d.add_arc(qu, qu2);
    d.add_arc(qu2, z);
  }
  RealizationCertificate cert = detail::self_check(d, target, 1, "k1_realization_case_i");
  cert.relabeling = relabeling;
  return cert;
}

// k = 1 when f <= 1 everywhere. With S = {u_1..u_t} the weight-one vertices
// and Q_{u_i} = {q_{2i-1}, q_{2i}}, start from C(D_0) = L(H) ∪ {z, q_{2t}},
// N^-(z) = K_H(u_1), and add
//   (q_1, z),  (x, q_{2i-1}) for x in K_H(u_i) + q_{2i},
//   (x, q_{2i}) for x in K_H(u_{i+1}) + q_{2i+1}   (i < t).
inline RealizationCertificate k1_realization_case_ii(const VertexWeightedGraph& w) {
  detail::require_k1_hypotheses(w);
  if (w.max_weight() > 1) throw Error(ErrorKind::HypothesisNotMet, "some f(v) >= 2");
  const Graph& h = w.graph();
  const std::vector<Vertex> s = w.support();
  const std::size_t t = s.size();
  auto q = [&](std::size_t j) {  // q_1 .. q_{2t}
    std::size_t i = (j + 1) / 2;
    return cocktail_label(s[i - 1], 1, j % 2 ? Side::X : Side::Y);
  };
  const Vertex z = "z";
  const Vertex partner = *h.neighbors(s[0]).begin();

  Digraph d = line_graph_realization(h, s[0], partner, z, q(2 * t)).certificate.digraph;
  for (std::size_t j = 1; j < 2 * t; ++j) d.add_vertex(q(j));
  d.add_arc(q(1), z);
  for (std::size_t i = 1; i <= t; ++i) {
    for (const auto& x : incident_edge_clique(h, s[i - 1])) d.add_arc(x, q(2 * i - 1));
    d.add_arc(q(2 * i), q(2 * i - 1));
  }
  for (std::size_t i = 1; i < t; ++i) {
    for (const auto& x : incident_edge_clique(h, s[i])) d.add_arc(x, q(2 * i));
    d.add_arc(q(2 * i + 1), q(2 * i));
  }
  RealizationCertificate cert =
      detail::self_check(d, generalized_line_graph(w).graph, 1, "k1_realization_case_ii");
  cert.relabeling = {{"z1", z}, {"z2", q(2 * t)}};
  return cert;
}

/// The explicit k = 1 digraph for L(K_{1,3}, f) with f(v4) = 2 (center v1),
/// under its published vertex names.
struct ExampleDigraph {
  Digraph digraph;
  Graph graph;                      // L(H,f)
  AcyclicOrdering stated_ordering;  // the published ordering
  std::map<std::string, Vertex> names;  // published name -> label
};

// The published arc list puts v1v2 where the block Q_{v4} is attached; with
// `literal` the names map verbatim (and the result does not realize L(H,f)),
// otherwise v2 and v4 are exchanged, an automorphism of K_{1,3}.
inline ExampleDigraph example_2_10_digraph(bool literal = false) {
  Graph h{{"v1", "v2", "v3", "v4"}, {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}}};
  VertexWeightedGraph w(h, {{"v4", 2}});
  ExampleDigraph ex;
  ex.graph = generalized_line_graph(w).graph;
  ex.names = {
      {"q1", cocktail_label("v4", 1, Side::X)}, {"q3", cocktail_label("v4", 1, Side::Y)},
      {"q2", cocktail_label("v4", 2, Side::X)}, {"q4", cocktail_label("v4", 2, Side::Y)},
      {"v1v2", edge_label("v1", literal ? "v2" : "v4")},
      {"v1v3", edge_label("v1", "v3")},
      {"v1v4", edge_label("v1", literal ? "v4" : "v2")},
      {"z", "z"},
  };
  const std::vector<std::pair<std::string, std::string>> arcs = {
      {"q1", "q2"}, {"q4", "q2"}, {"v1v2", "q2"},
      {"q1", "q3"}, {"q2", "q3"}, {"v1v2", "q3"},
      {"q2", "v1v3"}, {"q3", "v1v3"}, {"v1v2", "v1v3"},
      {"q3", "v1v4"}, {"q4", "v1v4"}, {"v1v2", "v1v4"},
      {"v1v2", "z"}, {"v1v3", "z"}, {"v1v4", "z"},
  };
  for (const auto& [name, label] : ex.names) ex.digraph.add_vertex(label);
  for (const auto& [a, b] : arcs) ex.digraph.add_arc(ex.names.at(a), ex.names.at(b));
  std::vector<Vertex> order;
  for (const char* name : {"q1", "q4", "v1v2", "q2", "q3", "v1v3", "v1v4", "z"})
    order.push_back(ex.names.at(name));
  ex.stated_ordering = AcyclicOrdering(order);
  return ex;
}

}  // namespace compnum
