#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "genuslab/automata.hpp"
#include "genuslab/budget.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/graphs.hpp"

namespace genuslab {

/// A surjection `projection` from the vertices of `total` onto those of
/// `base` such that every base arc (u, v) lifts from every vertex over u.
struct EmulatorMap {
  SimpleDigraph base;
  SimpleDigraph total;
  std::vector<VertexId> projection;

  friend bool operator==(const EmulatorMap&, const EmulatorMap&) = default;
};

struct EmulatorCheck {
  bool ok = true;
  /// First violated condition, empty when ok.
  std::string violation;

  explicit operator bool() const noexcept { return ok; }
};

EmulatorCheck verify_emulator(const EmulatorMap& m);

EmulatorMap identity_emulator(const SimpleDigraph& g);

/// `upper` emulates the total of `lower`; the result emulates lower's base.
EmulatorMap compose(const EmulatorMap& upper, const EmulatorMap& lower);

/// Fibered product over a common base. `first` and `second` are the
/// coordinate projections onto the totals of p1 and p2 (each an emulator).
struct FiberedProduct {
  EmulatorMap map;
  EmulatorMap first;
  EmulatorMap second;
  /// Product vertex -> (vertex of p1.total, vertex of p2.total).
  std::vector<std::pair<VertexId, VertexId>> pairs;
};

/// Vertices are pairs (x, y) with p1(x) = p2(y), ordered lexicographically;
/// (x, y) -> (x', y') is an arc when x -> x' and y -> y' are arcs lying over
/// the same base arc. Throws Error when the bases differ.
FiberedProduct fibered_product(const EmulatorMap& p1, const EmulatorMap& p2);

/// Lifts a simple directed cycle of the base (edge ids are arc ids) starting
/// at `start`, a total vertex over the cycle's first vertex. The walk follows
/// the cycle, always taking the smallest-id lift, until a vertex repeats; the
/// periodic part is returned. Its length is a positive multiple of c's.
/// Throws Error when c is not a simple directed cycle, `start` lies in the
/// wrong fiber, or m fails the covering condition along the way.
CycleWitness lift_cycle(const EmulatorMap& m, const CycleWitness& c, VertexId start);

/// True when the total has no simple cycle of length <= k. Throws Error
/// unless the base has that property.
bool girth_preserved(const EmulatorMap& m, std::size_t k);

/// Fiber size per base vertex, all >= 1.
using FiberSpec = std::vector<std::size_t>;

/// All fiber vectors of the given total size, lexicographically.
std::vector<FiberSpec> fiber_specs_of_size(std::size_t base_vertices, std::size_t total);

enum class SearchStatus { found, exhausted, budget_exhausted };

struct EmulatorSearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<EmulatorMap> emulator;
  std::optional<EmbeddingWitness> embedding;
  /// Sizes whose search space was fully explored without a hit.
  std::vector<std::size_t> exhausted_sizes;
  std::uint64_t nodes = 0;
};

/// Tight emulators of exactly `size` vertices (one arc from every total vertex
/// to the fiber of each base out-neighbour) whose underlying graph has genus
/// <= target_genus. Fiber vectors go lexicographically; within a fiber the
/// untouched vertices are interchangeable, so only the smallest is tried.
EmulatorSearchResult search_emulator_of_size(const SimpleDigraph& base, std::size_t size,
                                             std::size_t target_genus, Budget& budget);

/// Same, over sizes |base| .. max_size ascending; stops at the first hit.
EmulatorSearchResult search_min_genus_emulator(const SimpleDigraph& base, std::size_t max_size,
                                               std::size_t target_genus, Budget& budget);

struct LiftedAutomaton {
  Dfa dfa;
  /// Dfa state -> vertex of the emulator's total.
  std::vector<VertexId> total_vertex;
  /// Dfa state -> state of a_min (= base vertex).
  std::vector<StateId> projection;
};

/// Labels the total of `m` as an automaton over a_min: a state over x follows
/// letter a into the smallest-id out-neighbour lying over delta(x, a), or
/// stays put when delta(x, a) = x. Initial state is the smallest lift of the
/// initial state; every lift of a final state is final. The result is
/// trimmed. Throws Error naming the vertex and letter when no arc exists, or
/// when m's base is not the digraph of a_min.
LiftedAutomaton lift_with_projection(const EmulatorMap& m, const Dfa& a_min);
Dfa lift_to_automaton(const EmulatorMap& m, const Dfa& a_min);

/// Uniformly random tight emulator with the given fiber sizes.
EmulatorMap random_tight_emulator(const SimpleDigraph& base, const FiberSpec& sizes,
                                  std::mt19937_64& rng);

/// Random fiber sizes in [1, max_fiber].
FiberSpec random_fiber_spec(std::size_t base_vertices, std::size_t max_fiber,
                            std::mt19937_64& rng);

/// A random simple directed cycle of g, if g has one (found by a random walk
/// that stops at the first repeated vertex).
std::optional<CycleWitness> random_directed_cycle(const SimpleDigraph& g, std::mt19937_64& rng);

}  // namespace genuslab
