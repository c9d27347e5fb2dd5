#include <gtest/gtest.h>

#include "brute.hpp"
#include "locopt/generators.hpp"
#include "locopt/graph.hpp"

using namespace locopt;

namespace {

const Graph K3 = complete_graph(3);
const Graph P3 = path_graph(3);
const Graph P4 = path_graph(4);
const Graph C4 = cycle_graph(4);

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(2, {Edge{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {Edge{0, 1}, Edge{1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(2, {Edge{0, 2}}), InvalidArgument);
  EXPECT_THROW(Graph(2, {Edge{-1, 1}}), InvalidArgument);
}

TEST(Graph, AdjacencyIsSymmetricAndSorted) {
  Graph g(4, {Edge{2, 0}, Edge{0, 1}, Edge{3, 0}});
  EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(g.neighbors(3), (std::vector<Vertex>{0}));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.num_edges(), 3u);
}

TEST(MultiGraph, MergesDuplicateRecords) {
  MultiGraph mg(3, {{Edge{0, 1}, 1}, {Edge{1, 0}, 2}, {Edge{1, 2}, 1}});
  EXPECT_EQ(mg.records().size(), 2u);
  EXPECT_EQ(mg.multiplicity(0, 1), 3);
  EXPECT_EQ(mg.multiplicity(2, 1), 1);
  EXPECT_EQ(mg.total_multiplicity(), 4);
  EXPECT_THROW(MultiGraph(2, {{Edge{0, 1}, 0}}), InvalidArgument);
  EXPECT_THROW(MultiGraph(2, {{Edge{1, 1}, 1}}), InvalidArgument);
}

TEST(VertexSet, RangeChecks) {
  EXPECT_THROW(is_independent_set(K3, VertexSet{3}), InvalidArgument);
  EXPECT_THROW(is_dominating_set(K3, VertexSet{5}), InvalidArgument);
  EXPECT_THROW(is_vertex_cover(K3, VertexSet{-1}), InvalidArgument);
  EXPECT_THROW(is_feedback_vertex_set(K3, VertexSet{3}), InvalidArgument);
  EXPECT_THROW(is_clique(K3, VertexSet{7}), InvalidArgument);
}

TEST(Predicates, IndependentSet) {
  EXPECT_TRUE(is_independent_set(K3, VertexSet{0}));
  EXPECT_FALSE(is_independent_set(K3, VertexSet{0, 1}));
  EXPECT_TRUE(is_independent_set(P3, VertexSet{0, 2}));
}

TEST(Predicates, DominatingSet) {
  EXPECT_TRUE(is_dominating_set(star_graph(2), VertexSet{0}));
  EXPECT_FALSE(is_dominating_set(Graph(1), VertexSet{}));
  EXPECT_FALSE(is_dominating_set(P3, VertexSet{0}));
}

TEST(Predicates, VertexCover) {
  EXPECT_TRUE(is_vertex_cover(K3, VertexSet{0, 1}));
  EXPECT_TRUE(is_vertex_cover(P3, VertexSet{1}));
  EXPECT_FALSE(is_vertex_cover(P3, VertexSet{0}));
}

TEST(Predicates, FeedbackVertexSet) {
  EXPECT_TRUE(is_feedback_vertex_set(C4, VertexSet{0}));
  EXPECT_FALSE(is_feedback_vertex_set(C4, VertexSet{}));
  EXPECT_TRUE(is_feedback_vertex_set(star_graph(4), VertexSet{}));
}

TEST(Predicates, Matching) {
  const auto e = P4.edges();
  EXPECT_TRUE(is_matching(P4, Matching({e[0], e[2]})));
  EXPECT_FALSE(is_matching(P4, Matching({e[0], e[1]})));
  EXPECT_TRUE(is_matching(P4, Matching{}));
  EXPECT_FALSE(is_matching(P4, Matching({Edge{0, 3}})));
}

TEST(Predicates, Clique) {
  EXPECT_TRUE(is_clique(K3, VertexSet{0, 1, 2}));
  EXPECT_FALSE(is_clique(P3, VertexSet{0, 2}));
  EXPECT_TRUE(is_clique(P3, VertexSet{1}));
}

TEST(CutWeight, Examples) {
  const auto c4 = MultiGraph::from_graph(C4);
  EXPECT_EQ(cut_weight(c4, Cut::from_side_x(4, VertexSet{0, 2})), 4);
  EXPECT_EQ(cut_weight(c4, Cut::all_one_side(4)), 0);
  MultiGraph two(2, {{Edge{0, 1}, 2}});
  EXPECT_EQ(cut_weight(two, Cut::from_side_x(2, VertexSet{0})), 2);
  EXPECT_THROW(cut_weight(c4, Cut::all_one_side(3)), InvalidArgument);
}

TEST(Cut, CanonicalForm) {
  const Cut c = Cut::from_side_x(4, VertexSet{1, 3});
  EXPECT_TRUE(c.canonical().side(0));
  EXPECT_TRUE(c.same_partition(c.swapped()));
  EXPECT_EQ(c.canonical(), c.swapped().canonical());
  EXPECT_EQ(Cut::all_one_side(3).canonical(), Cut::from_side_x(3, VertexSet{0, 1, 2}).canonical());
  EXPECT_FALSE(Cut::all_one_side(3).canonical().side(0));
}

TEST(ComplementGraph, Examples) {
  EXPECT_EQ(complement_graph(K3).num_edges(), 0u);
  EXPECT_EQ(complement_graph(Graph(4)), complete_graph(4));
  EXPECT_EQ(complement_graph(P3), Graph(3, {Edge{0, 2}}));
}

TEST(AddIsolatedVertices, Examples) {
  const Graph g = add_isolated_vertices(K3, 2);
  EXPECT_EQ(g.num_vertices(), 5);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(add_isolated_vertices(P4, 0), P4);
  EXPECT_EQ(add_isolated_vertices(Graph(1), 3), Graph(4));
}

TEST(GraphProperties, AgreeWithBitmaskOracleOnRandomGraphs) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 1, 9);
    const Graph g = random_gnp(n, 0.4, rng);
    const auto adj = brute::adjacency(g);
    EXPECT_EQ(complement_graph(complement_graph(g)), g);
    const Graph gc = complement_graph(g);
    for (brute::Mask s = 0; s <= brute::full(n); ++s) {
      const VertexSet vs = VertexSet::from_bits(s);
      const VertexSet comp = vs.complement(n);
      const bool ind = is_independent_set(g, vs);
      ASSERT_EQ(ind, brute::independent(adj, s));
      ASSERT_EQ(ind, is_vertex_cover(g, comp));
      ASSERT_EQ(ind, is_clique(gc, vs));
      ASSERT_EQ(is_dominating_set(g, vs), brute::dominating(adj, n, s));
      ASSERT_EQ(is_feedback_vertex_set(g, vs), brute::feedback(adj, n, s));
      const auto mg = MultiGraph::from_graph(g);
      const Cut c = Cut::from_side_x(n, vs);
      ASSERT_EQ(cut_weight(mg, c), cut_weight(mg, c.swapped()));
      if (s == brute::full(n)) break;
    }
  }
}
