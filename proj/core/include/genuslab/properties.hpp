#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace genuslab::properties {

struct Outcome {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Description of the first failing trial.
  std::string first_failure;

  bool ok() const noexcept { return trials > 0 && failures == 0; }
};

/// Random tight emulators over bases of girth >= k + 1; a failure is a total
/// with a simple cycle of length <= k (undirected, as for automata).
Outcome girth_preservation(std::uint64_t seed, std::size_t trials, std::size_t k = 3);

/// Same bases and emulators, cycles counted along arc directions.
Outcome directed_girth_preservation(std::uint64_t seed, std::size_t trials, std::size_t k = 3);

/// Random emulators (tight plus surplus arcs) with random directed base
/// cycles; lift_cycle must return a simple directed cycle whose length is a
/// positive multiple of the base cycle's.
Outcome cycle_lifting(std::uint64_t seed, std::size_t trials);

/// Random pairs over a common base: both coordinate projections verify and
/// p1(first(z)) = p2(second(z)) for every product vertex z.
Outcome fibered_products(std::uint64_t seed, std::size_t trials);

/// Random rotations of complete Z_k automata on all k letters, k <= 5: the
/// face-census formula equals the traced genus.
Outcome face_census(std::uint64_t seed, std::size_t trials);

}  // namespace genuslab::properties
