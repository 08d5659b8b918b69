#include <gtest/gtest.h>

#include "genuslab/automata.hpp"
#include "genuslab/decide.hpp"
#include "genuslab/error.hpp"
#include "genuslab/fixtures.hpp"
#include "genuslab/graphs.hpp"
#include "oracle.hpp"

using namespace genuslab;
using genuslab::testing::all_words;
using genuslab::testing::distinguishing_word;

namespace {

Dfa zmod(std::uint32_t k, std::vector<std::uint32_t> letters) {
  return generate(ZmodFamily{k, std::move(letters)});
}

Dfa zmod_all(std::uint32_t k) {
  std::vector<std::uint32_t> letters(k);
  for (std::uint32_t i = 0; i < k; ++i) letters[i] = i;
  return zmod(k, letters);
}

bool accepts_tokens(const Dfa& a, std::vector<std::string> w) {
  return accepts(a, std::span<const std::string>(w));
}

}  // namespace

TEST(Generate, ZmodMatchesLetterSumOnAllShortWords) {
  const Dfa a = zmod(5, {0, 1, 2});
  ASSERT_EQ(a.num_states(), 5u);
  ASSERT_EQ(a.alphabet_size(), 3u);
  EXPECT_TRUE(a.is_complete());
  EXPECT_EQ(a.initial(), 0u);
  EXPECT_EQ(a.finals(), std::vector<StateId>{0});
  for (const auto& w : all_words(3, 6)) {
    unsigned sum = 0;
    for (SymbolId s : w) sum += s;  // symbol id equals the letter here
    EXPECT_EQ(accepts(a, std::span<const SymbolId>(w)), sum % 5 == 0);
  }
}

TEST(Generate, ShuffleSizeAndTransitions) {
  const Dfa a = generate(ShuffleFamily{4, 3});
  EXPECT_EQ(a.num_states(), 12u);
  EXPECT_EQ(a.num_transitions(), 24u);
  for (const auto& w : all_words(2, 8)) {
    const auto zeros = std::count(w.begin(), w.end(), 0u);
    const auto ones = static_cast<std::ptrdiff_t>(w.size()) - zeros;
    EXPECT_EQ(accepts(a, std::span<const SymbolId>(w)), zeros % 4 == 0 && ones % 3 == 0);
  }
}

TEST(Generate, CascadeZeroAcceptsEqualPairs) {
  const Dfa a = generate(ExponentialCascadeFamily{0});
  EXPECT_EQ(a.num_states(), 8u);
  for (const auto& w : all_words(5, 3))
    EXPECT_EQ(accepts(a, std::span<const SymbolId>(w)), w.size() == 2 && w[0] == w[1]);
}

TEST(Generate, CascadeOneAcceptsSumConstraint) {
  const Dfa a = generate(ExponentialCascadeFamily{1});
  for (const auto& w : all_words(5, 4))
    EXPECT_EQ(accepts(a, std::span<const SymbolId>(w)),
              w.size() == 3 && (w[0] + w[1]) % 5 == w[2]);
}

TEST(Generate, TwoLetterHierarchyShape) {
  const Dfa a = generate(TwoLetterHierarchyFamily{5});
  EXPECT_EQ(a.num_states(), 30u);
  EXPECT_TRUE(a.is_complete());
  EXPECT_EQ(girth(underlying_multigraph(a)), 5u);
}

TEST(Generate, RejectsBadParameters) {
  EXPECT_THROW(generate(ZmodFamily{5, {}}), Error);
  EXPECT_THROW(generate(ShuffleFamily{0, 3}), Error);
  EXPECT_THROW(generate(TwoLetterHierarchyFamily{4}), Error);
}

TEST(Minimize, GoldenSizes) {
  EXPECT_EQ(minimize(zmod(5, {0, 1, 2})).num_states(), 5u);
  EXPECT_EQ(minimize(zmod_all(6)).num_states(), 6u);
  const Dfa s = minimize(generate(ShuffleFamily{4, 3}));
  EXPECT_EQ(s.num_states(), 12u);
  EXPECT_EQ(s.num_transitions(), 24u);
}

TEST(Minimize, Idempotent) {
  for (const Dfa& a : {zmod(5, {0, 1, 2}), zmod_all(6), generate(ShuffleFamily{4, 4}),
                       generate(ExponentialCascadeFamily{1})}) {
    const Dfa m = minimize(a);
    EXPECT_EQ(minimize(m), m);
    EXPECT_TRUE(equivalent(m, a));
  }
}

TEST(Minimize, SplitAutomatonCollapsesToFiveStates) {
  const Dfa split = fixtures::zmod5_split_automaton();
  EXPECT_EQ(split.num_states(), 6u);
  EXPECT_EQ(minimize(split).num_states(), 5u);
}

TEST(Minimize, EmptyLanguageHasDesignatedForm) {
  Dfa a({"a"}, 2, 0);
  a.set_transition(0, 0, 1);
  EXPECT_EQ(minimize(a), empty_language_dfa({"a"}));
}

TEST(Minimize, KeepsOneSinkWhenTheInputHasADeadState) {
  const Dfa m = minimize(generate(ExponentialCascadeFamily{0}));
  EXPECT_EQ(m.num_states(), 8u);
  EXPECT_TRUE(m.is_complete());
  EXPECT_EQ(minimize(trim(generate(ExponentialCascadeFamily{0}))).num_states(), 7u);
}

// The verbatim two-letter automaton is not minimal: (i, j) and (i+3, j)
// agree on every word once j != 0.
TEST(Minimize, TwoLetterHierarchyIsNotMinimal) {
  const Dfa a = generate(TwoLetterHierarchyFamily{5});
  const Dfa m = minimize(a);
  EXPECT_EQ(m.num_states(), 18u);
  EXPECT_TRUE(equivalent(a, m));

  // Word oracle: states (1, 1) and (4, 1) accept the same suffixes.
  auto from = [&](StateId q) {
    Dfa c(a.alphabet(), a.num_states(), q);
    for (StateId s = 0; s < a.num_states(); ++s) {
      c.set_final(s, a.is_final(s));
      for (SymbolId x = 0; x < 2; ++x) c.set_transition(s, x, *a.next(s, x));
    }
    return c;
  };
  EXPECT_FALSE(distinguishing_word(from(1 * 5 + 1), from(4 * 5 + 1), 14).has_value());
  EXPECT_TRUE(distinguishing_word(from(1 * 5 + 0), from(4 * 5 + 0), 14).has_value());
}

TEST(Equivalent, Examples) {
  const Dfa z6 = minimize(zmod_all(6));
  EXPECT_TRUE(equivalent(z6, z6));
  EXPECT_TRUE(equivalent(minimize(zmod(5, {0, 1, 2})), fixtures::zmod5_split_automaton()));
  const Dfa z3 = minimize(zmod(3, {1}));
  const Dfa z6_1 = minimize(zmod(6, {1}));
  EXPECT_FALSE(equivalent(z3, z6_1));
  EXPECT_TRUE(accepts_tokens(z3, {"1", "1", "1"}));
  EXPECT_FALSE(accepts_tokens(z6_1, {"1", "1", "1"}));
}

TEST(Equivalent, AgreesWithWordOracle) {
  const std::vector<Dfa> pool{zmod(3, {1}), zmod(6, {1}), zmod(3, {2}), zmod(9, {3})};
  for (const Dfa& a : pool)
    for (const Dfa& b : pool) {
      if (a.alphabet() != b.alphabet()) continue;
      EXPECT_EQ(equivalent(a, b), !distinguishing_word(a, b, 12).has_value());
    }
}

TEST(Equivalent, AlphabetMismatchThrows) {
  EXPECT_THROW(equivalent(zmod(3, {1}), zmod(3, {2})), Error);
}

TEST(TrimComplete, Examples) {
  Dfa a({"a", "b"}, 2, 0);
  a.set_transition(0, 0, 1);
  a.set_transition(1, 1, 0);
  a.set_final(1);
  const Dfa c = complete(a);
  EXPECT_EQ(c.num_states(), 3u);
  EXPECT_TRUE(c.is_complete());
  EXPECT_TRUE(equivalent(a, c));

  const Dfa z6 = minimize(zmod_all(6));
  EXPECT_EQ(trim(complete(z6)), z6);
  EXPECT_TRUE(accepts_tokens(minimize(zmod(5, {0, 1, 2})), {"1", "2", "2"}));
  EXPECT_THROW(accepts_tokens(z6, {"7"}), Error);
}

TEST(Dfa, RejectsNondeterministicRebinding) {
  Dfa a({"a"}, 2, 0);
  a.set_transition(0, 0, 1);
  EXPECT_NO_THROW(a.set_transition(0, 0, 1));
  EXPECT_THROW(a.set_transition(0, 0, 0), Error);
}
