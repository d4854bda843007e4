#include <gtest/gtest.h>

#include "compnum/analysis.hpp"
#include "support/corpus.hpp"

using namespace compnum;

namespace {

Graph path4() { return Graph{{"v1", "v2", "v3", "v4"}, {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}}}; }
Graph star3() { return Graph{{"v1", "v2", "v3", "v4"}, {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}}}; }
VertexWeightedGraph fig3_caption() { return VertexWeightedGraph(path4(), {{"v3", 2}, {"v4", 1}}); }
VertexWeightedGraph fig3_prose() { return VertexWeightedGraph(path4(), {{"v3", 1}, {"v4", 2}}); }
VertexWeightedGraph fig4() { return VertexWeightedGraph(star3(), {{"v4", 2}}); }

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (const auto& v : g.vertices()) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

bool has_source(const Verdict& v, EvidenceSource s) {
  return std::any_of(v.evidence.begin(), v.evidence.end(), [&](const Evidence& e) { return e.source == s; });
}

}  // namespace

TEST(Conditions, CaptionWeightsSatisfyBothNecessaryConditions) {
  ConditionReport r = check_conditions(fig3_caption());
  EXPECT_TRUE(r.thm27_i);
  EXPECT_EQ(r.thm27_i_vertex, "v4");
  EXPECT_TRUE(r.thm27_ii);
  EXPECT_EQ(r.thm27_ii_vertex, "v1");
  EXPECT_FALSE(r.thm29_i);
  EXPECT_FALSE(r.thm29_ii);
  EXPECT_TRUE(r.hypotheses.connected && r.hypotheses.has_edge && r.hypotheses.nonzero_f);
}

TEST(Conditions, StarWithDoubleLeaf) {
  ConditionReport r = check_conditions(fig4());
  EXPECT_FALSE(r.thm29_i);
  EXPECT_FALSE(r.thm29_ii);
  EXPECT_FALSE(r.thm27_i);
  EXPECT_TRUE(r.thm27_ii);
}

TEST(Conditions, UnitEdge) {
  Graph k2{{"a", "b"}, {{"a", "b"}}};
  ConditionReport r = check_conditions(VertexWeightedGraph(k2, {{"a", 1}, {"b", 1}}));
  ASSERT_TRUE(r.thm29_i);
  EXPECT_EQ(*r.thm29_i, (Edge{"a", "b"}));
  EXPECT_TRUE(r.thm29_ii);
  EXPECT_TRUE(r.thm27_i);
}

TEST(Conditions, Hypotheses) {
  Graph g{{"a", "b", "c"}, {{"a", "b"}}};
  ConditionReport r = check_conditions(VertexWeightedGraph(g));
  EXPECT_FALSE(r.hypotheses.connected);
  EXPECT_TRUE(r.hypotheses.has_edge);
  EXPECT_FALSE(r.hypotheses.nonzero_f);
}

TEST(Lemma26, SimplicialOrIsolated) {
  EXPECT_FALSE(lemma_2_6_holds(corpus::cycle(4)));
  EXPECT_TRUE(lemma_2_6_holds(path4()));
  EXPECT_TRUE(lemma_2_6_holds(Graph{{"a"}}));
}

TEST(PendantReduce, CaptionTrace) {
  Graph g = generalized_line_graph(fig3_caption()).graph;
  PendantReduction r = pendant_reduce(g);
  EXPECT_EQ(r.deleted, (std::vector<Vertex>{"q:v4:1:y", "q:v4:1:x", "e:v1-v2"}));
  EXPECT_EQ(r.graph.num_vertices(), 6u);
  EXPECT_FALSE(r.stopped_at_floor);
  EXPECT_FALSE(lemma_2_6_holds(r.graph));
  EXPECT_TRUE(lemma_2_6_holds(g));  // only the reduced graph lacks simplicial vertices
}

TEST(PendantReduce, OrderDoesNotChangeResultShape) {
  for (const Graph& h : corpus::connected_with_edges(1, 4))
    for (const auto& w : corpus::weightings(h, 2, 3)) {
      Graph g = generalized_line_graph(w).graph;
      if (g.num_vertices() < 2 || !is_connected(g)) continue;
      PendantReduction a = pendant_reduce(g, PendantOrder::LargestLabelFirst);
      PendantReduction b = pendant_reduce(g, PendantOrder::SmallestLabelFirst);
      EXPECT_EQ(a.graph.num_vertices(), b.graph.num_vertices());
      EXPECT_EQ(degree_sequence(a.graph), degree_sequence(b.graph));
      EXPECT_EQ(lemma_2_6_holds(a.graph), lemma_2_6_holds(b.graph));
    }
}

TEST(PendantReduce, EdgeCases) {
  EXPECT_TRUE(pendant_reduce(corpus::cycle(4)).deleted.empty());
  PendantReduction star = pendant_reduce(corpus::complete_bipartite(1, 4));
  EXPECT_EQ(star.graph.num_vertices(), 2u);
  EXPECT_TRUE(star.stopped_at_floor);
  EXPECT_THROW(pendant_reduce(Graph{{"a", "b", "c"}, {{"a", "b"}}}), Error);
}

TEST(Classify, CaptionIsExactlyTwo) {
  Verdict v = classify(fig3_caption());
  EXPECT_EQ(v.k_value, KValue::ExactlyTwo);
  EXPECT_TRUE(has_source(v, EvidenceSource::Lemma26));
  EXPECT_TRUE(has_source(v, EvidenceSource::Theorem12Bound));
  for (const auto& e : v.evidence)
    if (e.source == EvidenceSource::Theorem12Bound) {
      ASSERT_TRUE(e.certificate);
      EXPECT_EQ(e.certificate->k, 2);
    } else if (e.source == EvidenceSource::Lemma26) {
      ASSERT_TRUE(e.reduction);
      EXPECT_EQ(e.reduction->deleted.size(), 3u);
    }
}

TEST(Classify, ProseIsExactlyOneByOracle) {
  Verdict v = classify(fig3_prose());
  EXPECT_EQ(v.k_value, KValue::ExactlyOne);
  ASSERT_EQ(v.evidence.size(), 1u);
  EXPECT_EQ(v.evidence[0].source, EvidenceSource::Oracle);
  ASSERT_TRUE(v.evidence[0].certificate);
  EXPECT_EQ(v.evidence[0].certificate->k, 1);
}

TEST(Classify, ConstructionsWinFirst) {
  Verdict i = classify(VertexWeightedGraph(path4(), {{"v1", 1}, {"v2", 1}, {"v4", 2}}));
  EXPECT_EQ(i.k_value, KValue::ExactlyOne);
  EXPECT_EQ(i.evidence.at(0).source, EvidenceSource::Theorem29Construction);
  Verdict ii = classify(VertexWeightedGraph(star3(), {{"v2", 1}, {"v4", 1}}));
  EXPECT_EQ(ii.k_value, KValue::ExactlyOne);
  EXPECT_EQ(ii.evidence.at(0).source, EvidenceSource::Theorem29Construction);
}

TEST(Classify, ZeroWeight) {
  Verdict c4 = classify(VertexWeightedGraph(corpus::cycle(4)));
  EXPECT_EQ(c4.k_value, KValue::ExactlyTwo);
  Verdict p = classify(VertexWeightedGraph(path4()));
  EXPECT_EQ(p.k_value, KValue::ExactlyOne);
  EXPECT_TRUE(has_source(p, EvidenceSource::Theorem11));
  Verdict k2 = classify(VertexWeightedGraph(Graph{{"a", "b"}, {{"a", "b"}}}));
  EXPECT_EQ(k2.k_value, KValue::ExactlyZero);
}

TEST(Classify, TinyBudgetLeavesItUndetermined) {
  SearchBudget b;
  b.max_total_vertices = 3;
  Verdict v = classify(fig3_prose(), b);
  EXPECT_EQ(v.k_value, KValue::AtMostTwoUndetermined);
  ASSERT_EQ(v.evidence.size(), 1u);
  EXPECT_EQ(v.evidence[0].source, EvidenceSource::Theorem12Bound);
}

TEST(Classify, RejectsBadHypotheses) {
  EXPECT_THROW(classify(VertexWeightedGraph(Graph{{"a"}})), Error);
  EXPECT_THROW(classify(VertexWeightedGraph(Graph{{"a", "b", "c"}, {{"a", "b"}}})), Error);
}

TEST(Strings, Stable) {
  EXPECT_STREQ(to_string(KValue::AtMostTwoUndetermined), "at-most-two-undetermined");
  EXPECT_STREQ(to_string(EvidenceSource::Theorem29Construction), "theorem-2.9-construction");
}
