#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace genuslab {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// Deterministic finite automaton with a possibly partial transition map.
///
/// States are dense ids `0..num_states()-1`; symbols are opaque tokens kept
/// in a fixed order (symbol ids index into `alphabet()`). Instances are plain
/// values: every transform below returns a new automaton.
class Dfa {
 public:
  Dfa() = default;
  Dfa(std::vector<std::string> alphabet, std::size_t num_states, StateId initial);

  std::size_t num_states() const noexcept { return finals_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  StateId initial() const noexcept { return initial_; }

  /// Symbol id of `token`; throws Error when the token is not in the alphabet.
  SymbolId symbol(std::string_view token) const;

  std::optional<StateId> next(StateId from, SymbolId sym) const;
  bool is_final(StateId q) const { return finals_.at(q); }
  std::vector<StateId> finals() const;

  /// Sets the target of (from, sym). Rebinding an existing pair to a
  /// different target throws: automata stay deterministic.
  void set_transition(StateId from, SymbolId sym, StateId to);
  void set_final(StateId q, bool accepting = true);

  std::size_t num_transitions() const;
  bool is_complete() const;
  /// Every state accessible from the initial state and co-accessible to a
  /// final state.
  bool is_trim() const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t index(StateId q, SymbolId a) const;

  std::vector<std::string> alphabet_;
  std::vector<StateId> delta_;  // num_states x alphabet_size, kNoState = undefined
  std::vector<bool> finals_;
  StateId initial_ = 0;
};

/// Result of a transform that drops or renumbers states; `old_to_new[q]` is
/// kNoState for dropped states.
struct Renumbered {
  Dfa dfa;
  std::vector<StateId> old_to_new;
};

/// Designated automaton for the empty language: one non-final initial state
/// and no transitions.
Dfa empty_language_dfa(std::vector<std::string> alphabet);

/// Renumbers states in breadth-first discovery order from the initial state,
/// exploring symbols in alphabet order. Unreachable states are dropped.
Renumbered canonical_order(const Dfa& a);

Renumbered trim_with_map(const Dfa& a);
Dfa trim(const Dfa& a);

/// Totalizes the transition map with at most one extra non-accepting sink.
Dfa complete(const Dfa& a);

bool accepts(const Dfa& a, std::span<const SymbolId> word);
/// Word given as alphabet tokens; throws Error on an unknown symbol.
bool accepts(const Dfa& a, std::span<const std::string> word);

/// Minimal automaton of L(a) (Hopcroft partition refinement), canonically
/// numbered.
///
/// Works on the accessible part. When that part contains a dead state (one
/// that cannot reach a final state) the result is the minimal *complete*
/// automaton, with a single sink. Otherwise the result is the minimal trim
/// automaton, so trim inputs give trim outputs. The empty language always maps
/// to `empty_language_dfa`.
Dfa minimize(const Dfa& a);

/// Exact language equality. Throws Error unless both alphabets hold the same
/// symbols (order may differ).
bool equivalent(const Dfa& a, const Dfa& b);

// ---------------------------------------------------------------------------
// Language families

/// Z_k restricted to a subalphabet: words whose letter sum is 0 mod k.
struct ZmodFamily {
  std::uint32_t k = 1;
  std::vector<std::uint32_t> letters;
};

/// Generalized cyclic language over Z/n_1 x ... x Z/n_r with generator letters.
struct ZmodProductFamily {
  std::vector<std::uint32_t> moduli;
  std::vector<std::vector<std::uint32_t>> generators;
};

/// L_{n,p}: |w|_0 = 0 mod n and |w|_1 = 0 mod p.
struct ShuffleFamily {
  std::uint32_t n = 1;
  std::uint32_t p = 1;
};

/// Two-letter automaton on Z/6 x Z/k with (i,j) -0-> (i+1,j), (i,j) -1-> (2i,j+1).
struct TwoLetterHierarchyFamily {
  std::uint32_t k = 5;
};

/// Finite language a_0...a_{n+1} over Z/5 with a_0 + ... + a_n = a_{n+1}.
struct ExponentialCascadeFamily {
  std::uint32_t n = 0;
};

using LanguageFamily = std::variant<ZmodFamily, ZmodProductFamily, ShuffleFamily,
                                    TwoLetterHierarchyFamily, ExponentialCascadeFamily>;

/// Builds the family's automaton with its natural state numbering:
///  - Zmod: state i is the residue i;
///  - ZmodProduct: mixed radix, first modulus most significant;
///  - Shuffle: (i,j) -> i*p + j;
///  - TwoLetterHierarchy: (i,j) -> i*k + j;
///  - ExponentialCascade: (a,j) -> 5j + a, then p0, top, bottom.
/// Throws Error on invalid parameters.
Dfa generate(const LanguageFamily& family);

}  // namespace genuslab
