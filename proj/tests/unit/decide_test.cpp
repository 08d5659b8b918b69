#include <gtest/gtest.h>

#include <numeric>

#include "genuslab/automata.hpp"
#include "genuslab/decide.hpp"
#include "genuslab/error.hpp"
#include "genuslab/graphs.hpp"

using namespace genuslab;

namespace {

Dfa zmod(std::uint32_t k, std::vector<std::uint32_t> letters) {
  return generate(ZmodFamily{k, std::move(letters)});
}

Dfa z6() { return zmod(6, {0, 1, 2, 3, 4, 5}); }

// The invariants every exact report must satisfy.
void expect_report_sound(const Dfa& input, const DecisionReport& r) {
  EXPECT_LE(r.genus_lower, r.genus_upper);
  EXPECT_TRUE(equivalent(r.witness, input));
  EXPECT_EQ(r.witness_embedding.genus, r.genus_upper);
  EXPECT_EQ(trace_faces(r.witness_embedding.graph, r.witness_embedding.rotation).genus, r.genus_upper);
  EXPECT_EQ(r.witness_embedding.graph, underlying_multigraph(r.witness));
  ASSERT_EQ(r.witness_projection.size(), r.witness.num_states());
  for (StateId q = 0; q < r.witness.num_states(); ++q)
    for (SymbolId a = 0; a < r.witness.alphabet_size(); ++a) {
      auto to = r.witness.next(q, a);
      auto base = r.minimal.next(r.witness_projection[q], a);
      ASSERT_EQ(to.has_value(), base.has_value());
      if (to) {
        EXPECT_EQ(r.witness_projection[*to], *base);
      }
    }
}

}  // namespace

TEST(ClassMembership, Examples) {
  const ClassMembership s = class_membership(generate(ShuffleFamily{4, 4}));
  EXPECT_EQ(s.m, 2u);
  EXPECT_EQ(s.girth, 4u);
  EXPECT_FALSE(s.in_class);

  const ClassMembership z = class_membership(z6());
  EXPECT_EQ(z.m, 6u);
  EXPECT_EQ(z.girth, 1u);
  EXPECT_FALSE(z.in_class);
}

// Minimizing the verbatim automaton merges (i, j) with (i+3, j) for j != 0,
// which creates 3-cycles.
TEST(ClassMembership, TwoLetterHierarchyMinimalAutomatonHasGirthThree) {
  const ClassMembership t = class_membership(generate(TwoLetterHierarchyFamily{5}));
  EXPECT_EQ(t.m, 2u);
  EXPECT_EQ(t.girth, 3u);
  EXPECT_FALSE(t.in_class);
}

TEST(ClassMembership, CompleteAutomatonOfHighGirthIsInClass) {
  // Complete automaton on 4 letters without loops or digons: Z_9 on {1,2,3,4}.
  const ClassMembership c = class_membership(zmod(9, {1, 2, 3, 4}));
  EXPECT_EQ(c.girth, 3u);
  EXPECT_TRUE(c.in_class);
}

TEST(Certificate, Examples) {
  EXPECT_TRUE(two_letter_nonplanar_certificate(generate(ShuffleFamily{4, 4})));
  EXPECT_FALSE(two_letter_nonplanar_certificate(generate(ShuffleFamily{4, 3})));
  EXPECT_THROW(two_letter_nonplanar_certificate(zmod(6, {1})), Error);
}

TEST(FinitenessCap, Examples) {
  EXPECT_EQ(finiteness_size_cap(4, 3), 12);
  EXPECT_EQ(finiteness_size_cap(2, 2), 10);
  EXPECT_EQ(finiteness_size_cap(3, 2), 4);
  EXPECT_THROW(finiteness_size_cap(4, 1), Error);
  EXPECT_THROW(finiteness_size_cap(1, 3), Error);
}

TEST(Decide, ZmodFiveIsPlanarWithSixStates) {
  const Dfa a = zmod(5, {0, 1, 2});
  const DecisionReport r = decide_genus(a);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.genus_upper, 0u);
  EXPECT_EQ(r.top_size, 6u);
  EXPECT_EQ(r.witness.num_states(), 6u);
  EXPECT_EQ(r.size_set, 5u);
  expect_report_sound(a, r);
}

TEST(Decide, PlanarMinimalAutomatonTakesTheFastPath) {
  const Dfa a = zmod(7, {1});
  const DecisionReport r = decide_genus(a);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.genus_upper, 0u);
  EXPECT_EQ(r.top_size, r.size_set);
  EXPECT_EQ(r.witness, r.minimal);
  std::vector<StateId> id(r.minimal.num_states());
  std::iota(id.begin(), id.end(), StateId{0});
  EXPECT_EQ(r.witness_projection, id);
  EXPECT_TRUE(r.searched.empty());
}

TEST(Decide, ShuffleFourFourIsToric) {
  const Dfa a = generate(ShuffleFamily{4, 4});
  const DecisionReport r = decide_genus(a);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.genus_upper, 1u);
  EXPECT_EQ(r.top_size, 16u);
  expect_report_sound(a, r);
}

TEST(Decide, Z6PlanarWithinTwelve) {
  DecideOptions opt;
  opt.budget_nodes = 100'000'000;
  opt.max_size = 12;
  const Dfa a = z6();
  const DecisionReport r = decide_genus(a, opt);
  EXPECT_TRUE(r.genus_exact);
  EXPECT_EQ(r.genus_upper, 0u);
  EXPECT_LE(r.witness.num_states(), 12u);
  expect_report_sound(a, r);
}

TEST(Decide, TwoLetterHierarchyReportsABound) {
  DecideOptions opt;
  opt.budget_nodes = 20'000;
  const Dfa a = generate(TwoLetterHierarchyFamily{5});
  const DecisionReport r = decide_genus(a, opt);
  // The minimal automaton has girth 3, so neither the class bound nor the
  // two-letter certificate applies.
  EXPECT_FALSE(r.membership.in_class);
  EXPECT_EQ(r.size_set, 18u);
  EXPECT_LE(r.genus_lower, r.genus_upper);
  expect_report_sound(a, r);
}

TEST(Decide, MoreBudgetNeverWorsens) {
  const Dfa a = generate(ShuffleFamily{5, 4});
  DecideOptions small, large;
  small.budget_nodes = 1'000;
  large.budget_nodes = 1'000'000;
  const DecisionReport s = decide_genus(a, small);
  const DecisionReport l = decide_genus(a, large);
  EXPECT_LE(l.genus_upper, s.genus_upper);
  EXPECT_GE(l.genus_lower, s.genus_lower);
  expect_report_sound(a, s);
  expect_report_sound(a, l);
}
