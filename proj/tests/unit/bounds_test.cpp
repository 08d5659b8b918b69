#include <gtest/gtest.h>

#include "genuslab/bounds.hpp"
#include "genuslab/error.hpp"

using namespace genuslab;

TEST(Rho, Table) {
  EXPECT_EQ(rho(2), 5);
  EXPECT_EQ(rho(3), 4);
  for (std::int64_t m = 4; m <= 10; ++m) EXPECT_EQ(rho(m), 3);
  EXPECT_THROW(rho(1), Error);
}

TEST(GenusLowerBound, Examples) {
  EXPECT_EQ(genus_lower_bound(4, 3, 9), Rational(5, 2));
  EXPECT_EQ(genus_lower_bound(2, 5, 30), Rational(4));
  EXPECT_EQ(genus_lower_bound(2, 5, 0), Rational(1));
}

TEST(GenusUpperBound, Examples) {
  EXPECT_EQ(genus_upper_bound(3, 5), Rational(6));
  EXPECT_EQ(genus_upper_bound(1, 7), Rational(1));
  EXPECT_EQ(genus_upper_bound(2, 16), Rational(9));
  EXPECT_EQ(genus_upper_bound(4, 9), Rational(29, 2));
}

TEST(HierarchyGenus, Examples) {
  EXPECT_EQ(hierarchy_genus(4), 3);
  EXPECT_EQ(hierarchy_genus(5), 5);
  EXPECT_EQ(hierarchy_genus(6), 8);
}

TEST(HierarchyGenus, MatchesCompleteGraphAndBound) {
  for (std::int64_t k = 4; k <= 50; ++k) {
    EXPECT_EQ(hierarchy_genus(k), complete_graph_genus(2 * k + 1)) << k;
    EXPECT_EQ(hierarchy_genus(k), ceil(genus_lower_bound(k, 3, 2 * k + 1))) << k;
  }
}

TEST(CompleteGraphGenus, Examples) {
  EXPECT_EQ(complete_graph_genus(5), 1);
  EXPECT_EQ(complete_graph_genus(4), 0);
  EXPECT_EQ(complete_graph_genus(9), 3);
  EXPECT_EQ(complete_graph_genus(3), 0);
}

TEST(SizeSetE, Examples) {
  EXPECT_EQ(size_set_E(4, 3, 9, 3), (std::vector<std::int64_t>{9, 10, 11, 12}));
  EXPECT_EQ(size_set_E(2, 5, 30, 4), (std::vector<std::int64_t>{30}));
  EXPECT_TRUE(size_set_E(3, 4, 1, 1).empty());
}

TEST(SizeSetE, InfiniteSetThrows) {
  EXPECT_THROW(size_set_E(2, 3, 5, 4), Error);
  EXPECT_THROW(size_set_E(3, 3, 5, 4), Error);
}

TEST(BoundReport, Fields) {
  const BoundReport r = bound_report(4, 3, 9);
  EXPECT_EQ(r.lower, Rational(5, 2));
  EXPECT_EQ(r.upper, Rational(29, 2));
}

TEST(RationalHelpers, RoundingAndPrinting) {
  EXPECT_EQ(ceil(Rational(5, 2)), 3);
  EXPECT_EQ(floor(Rational(5, 2)), 2);
  EXPECT_EQ(ceil(Rational(-5, 2)), -2);
  EXPECT_EQ(floor(Rational(-5, 2)), -3);
  EXPECT_EQ(to_display_string(Rational(5, 2)), "2.5");
  EXPECT_EQ(to_display_string(Rational(1, 3)), "1/3");
  EXPECT_EQ(to_fraction_string(Rational(4)), "4");
}

// The bound grows with k along the two-letter hierarchy (6k states).
TEST(GenusLowerBound, TwoLetterHierarchyGrows) {
  Rational prev(0);
  for (std::int64_t k = 5; k <= 20; ++k) {
    const Rational b = genus_lower_bound(2, 5, 6 * k);
    EXPECT_GT(b, prev);
    EXPECT_GE(b, Rational(2));
    prev = b;
  }
}
