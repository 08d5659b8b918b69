#include "genuslab/bounds.hpp"

#include <algorithm>
#include <string>

#include "genuslab/error.hpp"

namespace genuslab {

std::int64_t rho(std::int64_t m) {
  if (m < 2) throw Error("rho(m) needs m >= 2, got " + std::to_string(m));
  if (m == 2) return 5;
  if (m == 3) return 4;
  return 3;
}

Rational genus_lower_bound(std::int64_t m, std::int64_t j, std::int64_t n) {
  if (j < 1) throw Error("girth threshold must be >= 1");
  return Rational(1) + Rational(((j - 2) * m - j) * n, 2 * j);
}

Rational genus_upper_bound(std::int64_t m, std::int64_t n) {
  return Rational(1) + Rational((m - 1) * n, 2);
}

std::int64_t hierarchy_genus(std::int64_t k) {
  if (k < 4) throw Error("hierarchy genus formula needs k >= 4, got " + std::to_string(k));
  return ceil(Rational((2 * k - 2) * (2 * k - 3), 12));
}

std::int64_t complete_graph_genus(std::int64_t v) {
  if (v < 3) throw Error("complete graph genus formula needs v >= 3, got " + std::to_string(v));
  return ceil(Rational((v - 3) * (v - 4), 12));
}

std::vector<std::int64_t> size_set_E(std::int64_t m, std::int64_t j, std::int64_t size_L,
                                     std::int64_t genus_cap) {
  if ((j - 2) * m - j <= 0) throw Error("E not finite under these parameters");
  std::vector<std::int64_t> out;
  for (std::int64_t n = std::max<std::int64_t>(size_L, 0);
       genus_lower_bound(m, j, n) <= Rational(genus_cap); ++n)
    out.push_back(n);
  return out;
}

BoundReport bound_report(std::int64_t m, std::int64_t j, std::int64_t n) {
  return {m, j, n, genus_lower_bound(m, j, n), genus_upper_bound(m, n)};
}

}  // namespace genuslab
