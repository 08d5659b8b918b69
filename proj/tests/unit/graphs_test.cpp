#include <gtest/gtest.h>

#include "genuslab/automata.hpp"
#include "genuslab/error.hpp"
#include "genuslab/graphs.hpp"
#include "oracle.hpp"

using namespace genuslab;

namespace {

Dfa zmod_min(std::uint32_t k, std::vector<std::uint32_t> letters) {
  return minimize(generate(ZmodFamily{k, std::move(letters)}));
}

}  // namespace

TEST(UnderlyingMultigraph, ZmodFiveHasLoopsFromLetterZero) {
  const Multigraph g = underlying_multigraph(zmod_min(5, {0, 1, 2}));
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.num_edges(), 15u);
  std::size_t loops = 0;
  for (const Edge& e : g.edges()) loops += e.is_loop();
  EXPECT_EQ(loops, 5u);
}

TEST(UnderlyingMultigraph, SingleLoop) {
  Dfa a({"a"}, 1, 0);
  a.set_transition(0, 0, 0);
  const Multigraph g = underlying_multigraph(a);
  EXPECT_EQ(g.num_vertices(), 1u);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.edge(0).is_loop());
}

TEST(Simplify, ZmodFiveArcs) {
  const SimpleDigraph d = simplify(underlying_multigraph(zmod_min(5, {0, 1, 2})));
  EXPECT_EQ(d.num_vertices(), 5u);
  EXPECT_EQ(d.num_arcs(), 10u);
  for (VertexId i = 0; i < 5; ++i) {
    EXPECT_TRUE(d.has_arc(i, (i + 1) % 5));
    EXPECT_TRUE(d.has_arc(i, (i + 2) % 5));
  }
}

TEST(Simplify, Z6ContainsK6) {
  const SimpleDigraph d = simplify(underlying_multigraph(zmod_min(6, {0, 1, 2, 3, 4, 5})));
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = 0; v < 6; ++v)
      if (u != v) {
        EXPECT_TRUE(d.has_arc(u, v));
      }
}

TEST(Simplify, DifferentLanguagesShareTheDirectedTriangle) {
  Dfa words_of_length_3k({"a", "b"}, 3, 0);
  words_of_length_3k.set_final(0);
  for (StateId q = 0; q < 3; ++q)
    for (SymbolId s = 0; s < 2; ++s) words_of_length_3k.set_transition(q, s, (q + 1) % 3);
  const auto a = simplify(underlying_multigraph(zmod_min(3, {1})));
  const auto b = simplify(underlying_multigraph(minimize(words_of_length_3k)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num_arcs(), 3u);
}

TEST(Simplify, SimpleGraphUnchangedAndOrientationRequired) {
  const SimpleDigraph d(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(simplify(d.to_multigraph()), d);
  Multigraph unoriented(2);
  unoriented.add_edge(0, 1);
  EXPECT_THROW(simplify(unoriented), Error);
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(underlying_multigraph(zmod_min(5, {1, 2}))), 3u);
  EXPECT_EQ(girth(underlying_multigraph(zmod_min(6, {0, 1, 2, 3, 4, 5}))), 1u);
  EXPECT_EQ(girth(underlying_multigraph(generate(TwoLetterHierarchyFamily{5}))), 5u);
  EXPECT_EQ(girth(underlying_multigraph(generate(ShuffleFamily{4, 3}))), 3u);
}

TEST(Girth, ShuffleFourFour) {
  const Multigraph g = underlying_multigraph(minimize(generate(ShuffleFamily{4, 4})));
  EXPECT_TRUE(has_no_simple_cycle_up_to(g, 3));
  EXPECT_FALSE(has_no_simple_cycle_up_to(g, 4));
  EXPECT_THROW(has_no_simple_cycle_up_to(g, 0), Error);
}

TEST(Girth, ForestHasNone) {
  Multigraph tree(5);
  for (VertexId v = 1; v < 5; ++v) tree.add_edge(v / 2, v);
  EXPECT_FALSE(girth(tree).has_value());
  EXPECT_FALSE(shortest_cycle(tree).has_value());
  for (std::size_t k = 1; k < 8; ++k) EXPECT_TRUE(has_no_simple_cycle_up_to(tree, k));
}

TEST(Girth, MatchesBruteForceOnCorpus) {
  const auto corpus = genuslab::testing::small_multigraph_corpus(300, 20, 7);
  for (const Multigraph& g : corpus) {
    EXPECT_EQ(girth(g), genuslab::testing::brute_force_girth(g));
    if (auto c = shortest_cycle(g)) {
      EXPECT_TRUE(is_simple_cycle(g, *c));
      EXPECT_EQ(c->length(), *girth(g));
    }
  }
}

TEST(Girth, ParallelPairHasLengthTwo) {
  Multigraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(girth(g), 2u);
}

TEST(Cycles, VertexSequenceAndSimplicity) {
  const SimpleDigraph d(3, {{0, 1}, {1, 2}, {2, 0}});
  const Multigraph g = d.to_multigraph();
  const CycleWitness c{{d.arc_id(0, 1), d.arc_id(1, 2), d.arc_id(2, 0)}, true};
  EXPECT_TRUE(is_simple_cycle(g, c));
  EXPECT_EQ(cycle_vertices(g, c), (std::vector<VertexId>{0, 1, 2}));
  const CycleWitness repeated{{0, 0}, false};
  EXPECT_FALSE(is_simple_cycle(g, repeated));
}

TEST(DirectedGirth, Examples) {
  EXPECT_EQ(directed_girth(SimpleDigraph(3, {{0, 1}, {1, 2}, {2, 0}})), 3u);
  EXPECT_EQ(directed_girth(SimpleDigraph(2, {{0, 1}, {1, 0}})), 2u);
  EXPECT_FALSE(directed_girth(SimpleDigraph(3, {{0, 1}, {1, 2}, {0, 2}})).has_value());
}

TEST(Components, NumberedBySmallestMember) {
  Multigraph g(5);
  g.add_edge(3, 4);
  g.add_edge(0, 2);
  EXPECT_EQ(connected_components(g), (std::vector<std::size_t>{0, 1, 0, 2, 2}));
}

TEST(SimpleDigraphCtor, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(SimpleDigraph(2, {{0, 0}}), Error);
  EXPECT_THROW(SimpleDigraph(2, {{0, 1}, {0, 1}}), Error);
  EXPECT_THROW(SimpleDigraph(2, {{0, 5}}), Error);
}
