#include <gtest/gtest.h>

#include <algorithm>

#include "genuslab/automata.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/error.hpp"
#include "genuslab/fixtures.hpp"
#include "oracle.hpp"

using namespace genuslab;
using genuslab::testing::brute_force_genus;
using genuslab::testing::complete_bipartite;
using genuslab::testing::complete_graph;

namespace {

Multigraph petersen() {
  Multigraph g(10);
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

void expect_witness_consistent(const Multigraph& g, const GenusInterval& r) {
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->graph, g);
  EXPECT_EQ(trace_faces(g, r.witness->rotation).genus, r.upper);
  EXPECT_LE(r.lower, r.upper);
}

}  // namespace

TEST(TraceFaces, K4Fixture) {
  const EmbeddingWitness w = fixtures::k4_planar_embedding();
  const EmbeddingWitness t = trace_faces(w.graph, w.rotation);
  EXPECT_EQ(t.genus, 0u);
  EXPECT_EQ(t.census, (FaceCensus{{3, 4}}));
}

TEST(TraceFaces, SingleLoop) {
  Multigraph g(1);
  g.add_edge(0, 0);
  const EmbeddingWitness t = trace_faces(g, RotationSystem{{{0, 1}}});
  EXPECT_EQ(t.genus, 0u);
  EXPECT_EQ(t.census, (FaceCensus{{1, 2}}));
}

TEST(TraceFaces, IsolatedVerticesAndComponents) {
  Multigraph g(3);
  g.add_edge(0, 1);
  const EmbeddingWitness t = trace_faces(g, RotationSystem{{{0}, {1}, {}}});
  EXPECT_EQ(t.genus, 0u);
  EXPECT_EQ(t.num_faces(), 2u);
}

TEST(TraceFaces, InvalidRotationThrows) {
  const Multigraph g = complete_graph(3);
  EXPECT_THROW(trace_faces(g, RotationSystem{{{0, 2}, {1, 4}, {3}}}), Error);
  EXPECT_THROW(trace_faces(g, RotationSystem{{{0, 2}, {1, 4}, {3, 3}}}), Error);
  EXPECT_THROW(trace_faces(g, RotationSystem{{{0, 2}, {1, 4}}}), Error);
}

TEST(BruteForce, K33EveryRotationIsNonplanar) {
  EXPECT_EQ(brute_force_genus(complete_bipartite(3, 3)), 1u);
  EXPECT_EQ(brute_force_genus(complete_graph(4)), 0u);
}

TEST(GenusExact, NamedGraphs) {
  struct Case {
    const char* name;
    Multigraph g;
    std::size_t genus;
  };
  Multigraph tree(4);
  tree.add_edge(0, 1);
  tree.add_edge(1, 2);
  tree.add_edge(1, 3);
  const std::vector<Case> cases{
      {"K4", complete_graph(4), 0},     {"K5", complete_graph(5), 1},
      {"K33", complete_bipartite(3, 3), 1}, {"K6", complete_graph(6), 1},
      {"K7", complete_graph(7), 1},     {"K44", complete_bipartite(4, 4), 1},
      {"petersen", petersen(), 1},      {"tree", tree, 0},
  };
  for (const auto& c : cases) {
    const GenusInterval r = genus_exact(c.g);
    EXPECT_TRUE(r.exact) << c.name;
    EXPECT_EQ(r.upper, c.genus) << c.name;
    EXPECT_EQ(r.lower, c.genus) << c.name;
    expect_witness_consistent(c.g, r);
  }
}

TEST(GenusExact, MatchesExhaustiveRotationsOnCorpus) {
  const auto corpus = genuslab::testing::small_multigraph_corpus(250, 14, 11);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Multigraph& g = corpus[i];
    const GenusInterval r = genus_exact(g);
    ASSERT_TRUE(r.exact) << "graph " << i;
    EXPECT_EQ(r.upper, brute_force_genus(g)) << "graph " << i;
    expect_witness_consistent(g, r);
  }
}

// Graphs with at most 14 darts are all planar; this corpus reaches genus 1.
TEST(GenusExact, MatchesExhaustiveRotationsOnDenseGraphs) {
  const auto corpus = genuslab::testing::dense_simple_graph_corpus(200, 17);
  std::size_t nonplanar = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const GenusInterval r = genus_exact(corpus[i]);
    ASSERT_TRUE(r.exact) << "graph " << i;
    EXPECT_EQ(r.upper, brute_force_genus(corpus[i])) << "graph " << i;
    nonplanar += r.upper > 0;
  }
  EXPECT_GT(nonplanar, 20u);
}

TEST(GenusExact, DisjointUnionAddsGenera) {
  Multigraph g(10);
  for (VertexId base : {0u, 5u})
    for (VertexId i = 0; i < 5; ++i)
      for (VertexId j = i + 1; j < 5; ++j) g.add_edge(base + i, base + j);
  const GenusInterval r = genus_exact(g);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.upper, 2u);
  expect_witness_consistent(g, r);
}

TEST(GenusExact, LoopsAndParallelsDoNotChangeGenus) {
  Multigraph g = complete_graph(5);
  g.add_edge(0, 0);
  g.add_edge(2, 2);
  g.add_edge(1, 3);
  g.add_edge(3, 1);
  g.add_edge(4, 4);
  const GenusInterval r = genus_exact(g);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.upper, 1u);
  expect_witness_consistent(g, r);
}

TEST(GenusExact, TinyBudgetStaysSound) {
  const Multigraph g = complete_graph(8);
  const GenusInterval small = genus_exact(g, 1000);
  EXPECT_FALSE(small.exact);
  EXPECT_TRUE(small.budget_exhausted);
  EXPECT_LE(small.lower, 2u);  // genus of K8 is 2
  EXPECT_GE(small.upper, 2u);
  expect_witness_consistent(g, small);
  const GenusInterval larger = genus_exact(g, 100000);
  EXPECT_LE(larger.upper, small.upper);
  EXPECT_GE(larger.lower, small.lower);
}

TEST(GenusExact, ShuffleFourFourIsToric) {
  const Multigraph g = underlying_multigraph(minimize(generate(ShuffleFamily{4, 4})));
  const GenusInterval r = genus_exact(g);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.upper, 1u);
}

TEST(Planar, Examples) {
  const Multigraph z5 = underlying_multigraph(minimize(generate(ZmodFamily{5, {0, 1, 2}})));
  const PlanarityResult a = planar(z5);
  EXPECT_FALSE(a.planar);
  EXPECT_EQ(a.kuratowski, KuratowskiKind::k5);
  EXPECT_FALSE(a.kuratowski_edges.empty());

  const PlanarityResult b = planar(underlying_multigraph(minimize(generate(ExponentialCascadeFamily{0}))));
  EXPECT_FALSE(b.planar);
  EXPECT_EQ(b.kuratowski, KuratowskiKind::k33);

  Multigraph tree(6);
  for (VertexId v = 1; v < 6; ++v) tree.add_edge(0, v);
  const PlanarityResult c = planar(tree);
  EXPECT_TRUE(c.planar);
  ASSERT_TRUE(c.embedding.has_value());
  EXPECT_EQ(c.embedding->genus, 0u);
}

TEST(Planar, EmbeddingOfMultigraphIsSpherical) {
  Multigraph g = complete_graph(4);
  g.add_edge(0, 0);
  g.add_edge(1, 2);
  const PlanarityResult r = planar(g);
  ASSERT_TRUE(r.planar);
  EXPECT_EQ(trace_faces(g, r.embedding->rotation).genus, 0u);
}

TEST(Planar, AgreesWithExactGenusOnCorpus) {
  for (const Multigraph& g : genuslab::testing::small_multigraph_corpus(200, 24, 5)) {
    const bool p = planar(g).planar;
    const GenusInterval r = genus_exact(g);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(p, r.upper == 0);
  }
}

TEST(FaceCensusGenus, Examples) {
  EXPECT_EQ(face_census_genus(2, 7, FaceCensus{{4, 7}}), Rational(1));
  EXPECT_EQ(face_census_genus(1, 1, FaceCensus{{1, 2}}), Rational(0));
  EXPECT_THROW(face_census_genus(2, 7, FaceCensus{{4, 6}}), Error);
}
