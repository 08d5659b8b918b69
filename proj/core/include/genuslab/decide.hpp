#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "genuslab/automata.hpp"
#include "genuslab/budget.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/emulator.hpp"

namespace genuslab {

struct ClassMembership {
  std::size_t m = 0;
  /// Girth of the minimal automaton's multigraph; nullopt when acyclic.
  std::optional<std::size_t> girth;
  bool complete = false;
  bool in_class = false;
};

/// Minimizes `a` and tests membership in C(m): m >= 2, the minimal automaton
/// is complete and has no simple cycle of length <= rho(m) - 1.
ClassMembership class_membership(const Dfa& a);

/// True when the minimal automaton of a two-letter language is complete and
/// its multigraph has girth >= 4, which certifies genus >= 1. Throws Error
/// unless the alphabet has exactly two letters.
bool two_letter_nonplanar_certificate(const Dfa& a);

/// Largest n with genus_lower_bound(m, rho(m), n) <= g. Throws Error unless
/// m >= 2 and g >= 2.
std::int64_t finiteness_size_cap(std::int64_t m, std::int64_t g);

struct DecideOptions {
  /// Node budget, applied separately to the genus of the minimal automaton
  /// and to the emulator search.
  std::uint64_t budget_nodes = 10'000'000;
  /// Largest automaton searched outside C(m); default 2 |L|_set.
  std::optional<std::size_t> max_size;
};

struct DecisionReport {
  Dfa minimal;
  std::size_t size_set = 0;
  ClassMembership membership;

  std::size_t genus_lower = 0;
  std::size_t genus_upper = 0;
  bool genus_exact = false;

  /// |L|_top when exact, otherwise a lower bound.
  std::size_t top_size = 0;
  bool top_exact = false;

  /// Smallest automaton found at genus `genus_upper`, with its embedding and
  /// its state projection onto `minimal`.
  Dfa witness;
  EmbeddingWitness witness_embedding;
  std::vector<StateId> witness_projection;

  /// (target genus, sizes fully searched without a hit) per search round.
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> searched;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return genus_exact && top_exact; }
};

/// Bottom-up search for g(L) and |L|_top: each target genus from the proven
/// lower bound upwards is tried against tight emulators of the minimal
/// automaton's digraph, sizes ascending. Inside C(m) the sizes are bounded by
/// the finite set E, which makes the answer exact; elsewhere by max_size.
DecisionReport decide_genus(const Dfa& a, const DecideOptions& options = {});

}  // namespace genuslab
