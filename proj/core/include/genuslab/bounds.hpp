#pragma once

#include <cstdint>
#include <vector>

#include "genuslab/rational.hpp"

namespace genuslab {

/// Girth threshold for the class C(m): 5 for m = 2, 4 for m = 3, 3 for m >= 4.
/// Throws Error for m < 2.
std::int64_t rho(std::int64_t m);

/// 1 + ((j-2)m - j) n / (2j). A genus bound only for automata on m letters
/// with n states and no simple cycle of length <= j-1; the caller certifies
/// that hypothesis.
Rational genus_lower_bound(std::int64_t m, std::int64_t j, std::int64_t n);

/// 1 + (m-1) n / 2, valid for any automaton with n states on m letters.
Rational genus_upper_bound(std::int64_t m, std::int64_t n);

/// ceil((2k-2)(2k-3)/12), the genus of Z_{2k+1} on letters 1..k. k >= 4.
std::int64_t hierarchy_genus(std::int64_t k);

/// ceil((v-3)(v-4)/12), v >= 3.
std::int64_t complete_graph_genus(std::int64_t v);

/// { n >= size_L : genus_lower_bound(m, j, n) <= genus_cap }, ascending.
/// Throws Error when (j-2)m - j <= 0 (the set would be infinite).
std::vector<std::int64_t> size_set_E(std::int64_t m, std::int64_t j, std::int64_t size_L,
                                     std::int64_t genus_cap);

struct BoundReport {
  std::int64_t m = 0;
  std::int64_t j = 0;
  std::int64_t n = 0;
  Rational lower;
  Rational upper;
};

BoundReport bound_report(std::int64_t m, std::int64_t j, std::int64_t n);

}  // namespace genuslab
