#include <gtest/gtest.h>

#include "compnum/oracle.hpp"
#include "compnum/realization.hpp"
#include "support/corpus.hpp"

using namespace compnum;

namespace {

Graph path4() { return Graph{{"v1", "v2", "v3", "v4"}, {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}}}; }
Graph star3() { return Graph{{"v1", "v2", "v3", "v4"}, {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}}}; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InternalInvariant;
}

}  // namespace

TEST(Verify, AcceptsPathRealization) {
  // P3 a-b-c: a,b share z1; b,c share z2.
  Graph p3{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}};
  Digraph d{{"a", "b", "c", "z"}, {{"a", "c"}, {"b", "c"}, {"b", "z"}, {"c", "z"}}};
  RealizationCertificate c = verify_realization(d, p3, 1);
  EXPECT_EQ(c.added, std::vector<Vertex>{"z"});
  EXPECT_TRUE(c.ordering.validates(d));
  EXPECT_EQ(c.recomputed, with_isolated(p3, {"z"}));
  EXPECT_TRUE(realizes(d, p3, 1));
  EXPECT_FALSE(realizes(d, p3, 2));
}

TEST(Verify, ReportsMissingAndExtraEdges) {
  Graph p3{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}};
  Digraph d{{"a", "b", "c", "z"}, {{"a", "z"}, {"c", "z"}, {"b", "c"}}};
  try {
    verify_realization(d, p3, 1);
    FAIL();
  } catch (const CompetitionMismatchError& e) {
    EXPECT_EQ(e.missing(), (std::vector<Edge>{{"a", "b"}, {"b", "c"}}));
    EXPECT_EQ(e.extra(), (std::vector<Edge>{{"a", "c"}}));
    EXPECT_TRUE(e.non_isolated().empty());
  }
}

TEST(Verify, AddedVertexMustBeIsolated) {
  Graph g{{"a", "b"}, {{"a", "b"}}};
  Digraph d{{"a", "b", "z", "y"}, {{"a", "y"}, {"b", "y"}, {"z", "y"}}};
  try {
    verify_realization(d, g, 2);
    FAIL();
  } catch (const CompetitionMismatchError& e) {
    EXPECT_EQ(e.non_isolated(), std::vector<Vertex>{"z"});  // y is only prey
    EXPECT_EQ(e.extra().size(), 2u);
  }
}

TEST(Verify, CountAndCycles) {
  Graph g{{"a", "b"}, {{"a", "b"}}};
  EXPECT_EQ(kind_of([&] { verify_realization(Digraph{{"a"}}, g, 0); }), ErrorKind::CompetitionMismatch);
  Digraph cyc{{"a", "b", "z"}, {{"a", "z"}, {"b", "z"}, {"z", "a"}, {"a", "b"}, {"b", "a"}}};
  EXPECT_EQ(kind_of([&] { verify_realization(cyc, g, 1); }), ErrorKind::CyclicDigraph);
}

TEST(Normalize, DropsArcsOutOfAddedVertices) {
  Graph p3{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}};
  Digraph d{{"a", "b", "c", "z"}, {{"a", "z"}, {"b", "z"}, {"b", "c"}, {"c", "a"}, {"z", "c"}}};
  // z -> c makes z compete with b for c; z must be isolated in C(D), so this is
  // not a realization and normalization refuses it.
  EXPECT_EQ(kind_of([&] { normalize_realization(d, p3, 1); }), ErrorKind::InvalidInput);

  Digraph ok{{"a", "b", "c", "z", "y"}, {{"a", "c"}, {"b", "c"}, {"b", "z"}, {"c", "z"}, {"z", "y"}}};
  RealizationCertificate n = normalize_realization(ok, p3, 2);
  EXPECT_FALSE(n.digraph.has_arc("z", "y"));
  EXPECT_TRUE(n.ordering.validates(n.digraph));
  const auto& seq = n.ordering.sequence();
  EXPECT_TRUE(p3.has_vertex(seq[0]) && p3.has_vertex(seq[1]) && p3.has_vertex(seq[2]));
  EXPECT_TRUE(n.digraph.in_neighbors(seq[0]).empty());
  EXPECT_TRUE(n.digraph.in_neighbors(seq[1]).empty());
}

TEST(Compose, EdgelessH) {
  Graph g{{"a", "b"}, {{"a", "b"}}};
  Graph h({"u1", "u2"}, {});
  Digraph dprime{{"a", "b", "u1", "u2"}, {{"a", "u1"}, {"b", "u1"}}};
  ComposeResult r = compose_realization(dprime, g, {"a", "b"}, h, TopTwo{"u1", "u2", {}});
  Graph target = semi_join(g, {"a", "b"}, h);
  RealizationCertificate c = verify_realization(r.digraph, target, 2);
  EXPECT_EQ(r.added, (std::vector<Vertex>{"z1", "z2"}));
  EXPECT_TRUE(r.ordering.validates(r.digraph));
  EXPECT_EQ(c.k, 2);
}

TEST(Compose, CocktailBlock) {
  CpRealization cp = cp_realization(2);
  Graph g{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}};
  const Vertex u1 = cp.top_two.first, u2 = cp.top_two.second;
  // D' realizes G ∪ {u1, u2}.
  Digraph dprime{{"a", "b", "c", u1, u2}, {{"a", u1}, {"b", u1}, {"b", u2}, {"c", u2}}};
  ComposeResult r = compose_realization(dprime, g, {"a", "b"}, cp.certificate.base, cp.top_two);
  Graph target = semi_join(g, {"a", "b"}, cp.certificate.base);
  EXPECT_TRUE(realizes(r.digraph, target, 2));
  // The first |V(G)| + 2 entries of the ordering induce D'.
  const auto& seq = r.ordering.sequence();
  VertexSet head(seq.begin(), seq.begin() + 5);
  EXPECT_EQ(head, dprime.vertices());
  EXPECT_EQ(r.digraph.induced(head).arcs(), dprime.arcs());
}

TEST(Compose, Preconditions) {
  Graph g{{"a", "b", "c"}, {{"a", "b"}}};
  Graph h({"u1", "u2"}, {});
  Digraph dprime{{"a", "b", "c", "u1", "u2"}, {{"a", "u1"}, {"b", "u1"}}};
  EXPECT_EQ(kind_of([&] { compose_realization(dprime, g, {"a", "c"}, h, TopTwo{"u1", "u2", {}}); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(kind_of([&] { compose_realization(dprime, g, {"a"}, h, TopTwo{"u1", "u1", {}}); }),
            ErrorKind::PreconditionViolated);
  Graph hx{{"u1", "u2", "u3"}, {{"u1", "u2"}}};
  EXPECT_EQ(kind_of([&] { compose_realization(dprime, g, {"a"}, hx, TopTwo{"u1", "u2", {}}); }),
            ErrorKind::PreconditionViolated);
}

TEST(LineGraphRealization, DesignatedSinks) {
  for (const Graph& h : corpus::connected_with_edges(1, 5))
    for (const auto& [u, v] : h.edges()) {
      for (const auto& [a, b] : {Edge{u, v}, Edge{v, u}}) {
        DesignatedRealization r = line_graph_realization(h, a, b, "z1", "z2");
        EXPECT_EQ(r.certificate.k, 2);
        EXPECT_EQ(r.certificate.digraph.in_neighbors("z1"), incident_edge_clique(h, a));
        EXPECT_EQ(r.certificate.digraph.in_neighbors("z2"), incident_edge_clique(h, b));
      }
    }
}

TEST(LineGraphRealization, RejectsNonEdgeAndCollisions) {
  EXPECT_EQ(kind_of([] { line_graph_realization(path4(), "v1", "v3", "z1", "z2"); }), ErrorKind::NotAnEdge);
  EXPECT_EQ(kind_of([] { line_graph_realization(path4(), "v1", "v2", "e:v1-v2", "z2"); }),
            ErrorKind::VertexCollision);
}

TEST(CpRealization, SmallM) {
  for (int m = 1; m <= 5; ++m) {
    CpRealization r = cp_realization(m);
    EXPECT_EQ(r.certificate.k, 2) << m;
    EXPECT_EQ(r.certificate.base, cocktail_party(m).graph);
    EXPECT_TRUE(r.certificate.ordering.validates(r.certificate.digraph));
    EXPECT_EQ(r.top_two.first, r.certificate.ordering[0]);
    EXPECT_EQ(r.top_two.second, r.certificate.ordering[1]);
  }
  EXPECT_EQ(kind_of([] { cp_realization(0); }), ErrorKind::NonPositiveM);
}

TEST(GlgRealization, DesignatedRealVerticesForNonzeroF) {
  VertexWeightedGraph w(path4(), {{"v3", 2}, {"v4", 1}});
  DesignatedRealization r = glg_realization(w, "v1", "v2");
  EXPECT_EQ(r.certificate.k, 2);
  EXPECT_EQ(r.certificate.base, generalized_line_graph(w).graph);
  EXPECT_EQ(r.certificate.digraph.in_neighbors(r.z1), incident_edge_clique(path4(), "v1"));
  EXPECT_EQ(r.certificate.digraph.in_neighbors(r.z2), incident_edge_clique(path4(), "v2"));
}

TEST(GlgRealization, ZeroFUsesAddedVertices) {
  DesignatedRealization r = glg_realization(VertexWeightedGraph(star3()), "v1", "v2");
  const auto& added = r.certificate.added;
  EXPECT_NE(std::find(added.begin(), added.end(), r.z1), added.end());
  EXPECT_NE(std::find(added.begin(), added.end(), r.z2), added.end());
}

TEST(GlgRealization, K2WithOneWeight) {
  // L(K_2, (1, 0)) is the path x - e - y.
  Graph k2{{"a", "b"}, {{"a", "b"}}};
  VertexWeightedGraph w(k2, {{"a", 1}});
  DesignatedRealization r = glg_realization(w, "a", "b");
  EXPECT_TRUE(realizes(r.certificate.digraph, generalized_line_graph(w).graph, 2));
  EXPECT_EQ(r.certificate.digraph.in_neighbors(r.z1), (VertexSet{"e:a-b"}));
}

TEST(K1CaseI, PathWithUnitEdge) {
  VertexWeightedGraph w(path4(), {{"v1", 1}, {"v2", 1}});
  RealizationCertificate c = k1_realization_case_i(w, Edge{"v1", "v2"});
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.base, generalized_line_graph(w).graph);
  // f is positive off {u, v}: the general branch.
  VertexWeightedGraph w2(path4(), {{"v1", 1}, {"v2", 1}, {"v4", 2}});
  EXPECT_EQ(k1_realization_case_i(w2, std::nullopt).k, 1);
}

TEST(K1CaseI, Hypotheses) {
  VertexWeightedGraph w(path4(), {{"v1", 1}, {"v2", 2}});
  EXPECT_EQ(kind_of([&] { k1_realization_case_i(w, Edge{"v1", "v2"}); }), ErrorKind::HypothesisNotMet);
  EXPECT_EQ(kind_of([&] { k1_realization_case_i(w, std::nullopt); }), ErrorKind::HypothesisNotMet);
  EXPECT_EQ(kind_of([&] { k1_realization_case_i(VertexWeightedGraph(path4()), std::nullopt); }),
            ErrorKind::HypothesisNotMet);
  VertexWeightedGraph w3(path4(), {{"v1", 1}, {"v3", 1}});
  EXPECT_EQ(kind_of([&] { k1_realization_case_i(w3, Edge{"v1", "v3"}); }), ErrorKind::NotAnEdge);
}

TEST(K1CaseII, UnitWeights) {
  VertexWeightedGraph w(star3(), {{"v2", 1}, {"v3", 1}, {"v4", 1}});
  RealizationCertificate c = k1_realization_case_ii(w);
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.base, generalized_line_graph(w).graph);
  EXPECT_EQ(kind_of([] { k1_realization_case_ii(VertexWeightedGraph(star3(), {{"v4", 2}})); }),
            ErrorKind::HypothesisNotMet);
}

TEST(Example210, PublishedDigraphRealizesWithOneVertex) {
  ExampleDigraph ex = example_2_10_digraph();
  RealizationCertificate c = verify_realization(ex.digraph, ex.graph, 1);
  EXPECT_EQ(c.added, std::vector<Vertex>{"z"});
  EXPECT_TRUE(ex.stated_ordering.validates(ex.digraph));
  EXPECT_EQ(ex.stated_ordering.size(), 8u);
  EXPECT_EQ(ex.names.at("v1v2"), "e:v1-v4");
}

TEST(Example210, LiteralNamesDoNotRealize) {
  ExampleDigraph ex = example_2_10_digraph(true);
  try {
    verify_realization(ex.digraph, ex.graph, 1);
    FAIL();
  } catch (const CompetitionMismatchError& e) {
    EXPECT_FALSE(e.missing().empty());
  }
  EXPECT_TRUE(ex.stated_ordering.validates(ex.digraph));
}
