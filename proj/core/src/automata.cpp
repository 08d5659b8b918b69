#include "genuslab/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <type_traits>
#include <utility>

#include "genuslab/error.hpp"

namespace genuslab {

Dfa::Dfa(std::vector<std::string> alphabet, std::size_t num_states, StateId initial)
    : alphabet_(std::move(alphabet)),
      delta_(num_states * alphabet_.size(), kNoState),
      finals_(num_states, false),
      initial_(initial) {
  if (num_states == 0) throw Error("a DFA needs at least one state");
  if (initial >= num_states) throw Error("initial state out of range");
  std::set<std::string> seen;
  for (const auto& s : alphabet_) {
    if (s.empty()) throw Error("empty alphabet symbol");
    if (!seen.insert(s).second) throw Error("duplicate alphabet symbol '" + s + "'");
  }
}

std::size_t Dfa::index(StateId q, SymbolId a) const {
  if (q >= num_states()) throw Error("state " + std::to_string(q) + " out of range");
  if (a >= alphabet_size()) throw Error("symbol id " + std::to_string(a) + " out of range");
  return static_cast<std::size_t>(q) * alphabet_size() + a;
}

SymbolId Dfa::symbol(std::string_view token) const {
  for (SymbolId a = 0; a < alphabet_.size(); ++a)
    if (alphabet_[a] == token) return a;
  throw Error("symbol '" + std::string(token) + "' is not in the alphabet");
}

std::optional<StateId> Dfa::next(StateId from, SymbolId sym) const {
  StateId t = delta_[index(from, sym)];
  if (t == kNoState) return std::nullopt;
  return t;
}

std::vector<StateId> Dfa::finals() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < num_states(); ++q)
    if (finals_[q]) out.push_back(q);
  return out;
}

void Dfa::set_transition(StateId from, SymbolId sym, StateId to) {
  if (to >= num_states()) throw Error("transition target " + std::to_string(to) + " out of range");
  StateId& slot = delta_[index(from, sym)];
  if (slot != kNoState && slot != to)
    throw Error("nondeterministic transition from state " + std::to_string(from) + " on '" +
                alphabet_[sym] + "'");
  slot = to;
}

void Dfa::set_final(StateId q, bool accepting) {
  if (q >= num_states()) throw Error("final state " + std::to_string(q) + " out of range");
  finals_[q] = accepting;
}

std::size_t Dfa::num_transitions() const {
  return static_cast<std::size_t>(
      std::count_if(delta_.begin(), delta_.end(), [](StateId t) { return t != kNoState; }));
}

bool Dfa::is_complete() const {
  return std::none_of(delta_.begin(), delta_.end(), [](StateId t) { return t == kNoState; });
}

namespace {

std::vector<bool> accessible_states(const Dfa& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::deque<StateId> queue{a.initial()};
  seen[a.initial()] = true;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (SymbolId s = 0; s < a.alphabet_size(); ++s) {
      if (auto t = a.next(q, s); t && !seen[*t]) {
        seen[*t] = true;
        queue.push_back(*t);
      }
    }
  }
  return seen;
}

std::vector<bool> coaccessible_states(const Dfa& a) {
  std::vector<std::vector<StateId>> preds(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.alphabet_size(); ++s)
      if (auto t = a.next(q, s)) preds[*t].push_back(q);
  std::vector<bool> seen(a.num_states(), false);
  std::deque<StateId> queue;
  for (StateId q : a.finals()) {
    seen[q] = true;
    queue.push_back(q);
  }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId p : preds[q]) {
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

// Copies `a` restricted to states with keep[q], numbering them by BFS from
// the initial state (which must be kept) through kept states only.
Renumbered restrict_canonical(const Dfa& a, const std::vector<bool>& keep) {
  std::vector<StateId> order;
  std::vector<StateId> old_to_new(a.num_states(), kNoState);
  old_to_new[a.initial()] = 0;
  order.push_back(a.initial());
  for (std::size_t head = 0; head < order.size(); ++head) {
    StateId q = order[head];
    for (SymbolId s = 0; s < a.alphabet_size(); ++s) {
      auto t = a.next(q, s);
      if (t && keep[*t] && old_to_new[*t] == kNoState) {
        old_to_new[*t] = static_cast<StateId>(order.size());
        order.push_back(*t);
      }
    }
  }
  Dfa out(a.alphabet(), order.size(), 0);
  for (StateId nq = 0; nq < order.size(); ++nq) {
    StateId q = order[nq];
    out.set_final(nq, a.is_final(q));
    for (SymbolId s = 0; s < a.alphabet_size(); ++s) {
      auto t = a.next(q, s);
      if (t && old_to_new[*t] != kNoState) out.set_transition(nq, s, old_to_new[*t]);
    }
  }
  return {std::move(out), std::move(old_to_new)};
}

}  // namespace

bool Dfa::is_trim() const {
  auto acc = accessible_states(*this);
  auto coacc = coaccessible_states(*this);
  for (StateId q = 0; q < num_states(); ++q)
    if (!acc[q] || !coacc[q]) return false;
  return true;
}

Dfa empty_language_dfa(std::vector<std::string> alphabet) {
  return Dfa(std::move(alphabet), 1, 0);
}

Renumbered canonical_order(const Dfa& a) {
  return restrict_canonical(a, std::vector<bool>(a.num_states(), true));
}

Renumbered trim_with_map(const Dfa& a) {
  auto acc = accessible_states(a);
  auto coacc = coaccessible_states(a);
  if (!coacc[a.initial()]) {
    std::vector<StateId> map(a.num_states(), kNoState);
    map[a.initial()] = 0;
    return {empty_language_dfa(a.alphabet()), std::move(map)};
  }
  std::vector<bool> keep(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) keep[q] = acc[q] && coacc[q];
  return restrict_canonical(a, keep);
}

Dfa trim(const Dfa& a) { return trim_with_map(a).dfa; }

Dfa complete(const Dfa& a) {
  if (a.is_complete()) return a;
  const auto n = static_cast<StateId>(a.num_states());
  Dfa out(a.alphabet(), n + 1, a.initial());
  for (StateId q = 0; q < n; ++q) {
    out.set_final(q, a.is_final(q));
    for (SymbolId s = 0; s < a.alphabet_size(); ++s)
      out.set_transition(q, s, a.next(q, s).value_or(n));
  }
  for (SymbolId s = 0; s < a.alphabet_size(); ++s) out.set_transition(n, s, n);
  return out;
}

bool accepts(const Dfa& a, std::span<const SymbolId> word) {
  StateId q = a.initial();
  for (SymbolId s : word) {
    if (s >= a.alphabet_size()) throw Error("symbol id " + std::to_string(s) + " out of range");
    auto t = a.next(q, s);
    if (!t) return false;
    q = *t;
  }
  return a.is_final(q);
}

bool accepts(const Dfa& a, std::span<const std::string> word) {
  std::vector<SymbolId> ids;
  ids.reserve(word.size());
  for (const auto& token : word) ids.push_back(a.symbol(token));
  return accepts(a, std::span<const SymbolId>(ids));
}

namespace {

// Hopcroft refinement on a complete transition table. Returns the block id
// of every state.
std::vector<std::size_t> hopcroft_blocks(const std::vector<StateId>& delta, std::size_t n,
                                         std::size_t m, const std::vector<bool>& finals) {
  std::vector<std::vector<std::vector<StateId>>> inverse(m, std::vector<std::vector<StateId>>(n));
  for (StateId q = 0; q < n; ++q)
    for (std::size_t s = 0; s < m; ++s) inverse[s][delta[q * m + s]].push_back(q);

  std::vector<std::vector<StateId>> blocks;
  std::vector<std::size_t> block_of(n);
  {
    std::vector<StateId> accepting, rejecting;
    for (StateId q = 0; q < n; ++q) (finals[q] ? accepting : rejecting).push_back(q);
    for (auto* part : {&accepting, &rejecting}) {
      if (part->empty()) continue;
      for (StateId q : *part) block_of[q] = blocks.size();
      blocks.push_back(std::move(*part));
    }
  }

  std::deque<std::pair<std::size_t, std::size_t>> work;
  std::vector<char> in_work;
  auto push = [&](std::size_t block, std::size_t sym) {
    if (in_work.size() < (block + 1) * m) in_work.resize((block + 1) * m, 0);
    if (!in_work[block * m + sym]) {
      in_work[block * m + sym] = 1;
      work.emplace_back(block, sym);
    }
  };
  auto queued = [&](std::size_t block, std::size_t sym) {
    return block * m + sym < in_work.size() && in_work[block * m + sym];
  };
  if (blocks.size() == 2) {
    std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    for (std::size_t s = 0; s < m; ++s) push(smaller, s);
  }

  std::vector<char> marked(n, 0);
  std::vector<std::size_t> hit_count;
  while (!work.empty()) {
    auto [splitter, sym] = work.front();
    work.pop_front();
    in_work[splitter * m + sym] = 0;

    std::vector<StateId> preimage;
    for (StateId q : blocks[splitter])
      for (StateId p : inverse[sym][q])
        if (!marked[p]) {
          marked[p] = 1;
          preimage.push_back(p);
        }

    hit_count.assign(blocks.size(), 0);
    std::vector<std::size_t> touched;
    for (StateId p : preimage)
      if (hit_count[block_of[p]]++ == 0) touched.push_back(block_of[p]);

    for (std::size_t y : touched) {
      if (hit_count[y] == blocks[y].size()) continue;
      std::vector<StateId> inside, outside;
      for (StateId q : blocks[y]) (marked[q] ? inside : outside).push_back(q);
      const std::size_t fresh = blocks.size();
      blocks[y] = std::move(outside);
      for (StateId q : inside) block_of[q] = fresh;
      blocks.push_back(std::move(inside));
      for (std::size_t s = 0; s < m; ++s) {
        if (queued(y, s)) {
          push(fresh, s);
        } else {
          push(blocks[y].size() <= blocks[fresh].size() ? y : fresh, s);
        }
      }
    }
    for (StateId p : preimage) marked[p] = 0;
  }
  return block_of;
}

}  // namespace

Dfa minimize(const Dfa& input) {
  const Dfa a = canonical_order(input).dfa;  // accessible part
  const std::size_t m = a.alphabet_size();
  const auto coacc = coaccessible_states(a);
  if (!coacc[a.initial()]) return empty_language_dfa(a.alphabet());
  const bool keep_sink = std::find(coacc.begin(), coacc.end(), false) != coacc.end();

  // Complete table with an explicit sink at index n when needed.
  std::size_t n = a.num_states();
  const bool add_sink = !a.is_complete();
  const std::size_t total = n + (add_sink ? 1 : 0);
  std::vector<StateId> delta(total * m);
  std::vector<bool> finals(total, false);
  for (StateId q = 0; q < n; ++q) {
    finals[q] = a.is_final(q);
    for (SymbolId s = 0; s < m; ++s) delta[q * m + s] = a.next(q, s).value_or(static_cast<StateId>(n));
  }
  if (add_sink)
    for (SymbolId s = 0; s < m; ++s) delta[n * m + s] = static_cast<StateId>(n);

  const auto block_of = hopcroft_blocks(delta, total, m, finals);
  const std::size_t num_blocks = *std::max_element(block_of.begin(), block_of.end()) + 1;

  // Quotient automaton, then locate the dead block (at most one exists).
  std::vector<StateId> rep(num_blocks, kNoState);
  for (StateId q = 0; q < total; ++q)
    if (rep[block_of[q]] == kNoState) rep[block_of[q]] = q;
  Dfa quotient(a.alphabet(), num_blocks, static_cast<StateId>(block_of[a.initial()]));
  for (std::size_t b = 0; b < num_blocks; ++b) {
    quotient.set_final(static_cast<StateId>(b), finals[rep[b]]);
    for (SymbolId s = 0; s < m; ++s)
      quotient.set_transition(static_cast<StateId>(b), s,
                              static_cast<StateId>(block_of[delta[rep[b] * m + s]]));
  }
  if (keep_sink) return canonical_order(quotient).dfa;
  return trim(quotient);
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size() != b.alphabet_size())
    throw Error("alphabet mismatch: sizes differ");
  std::vector<SymbolId> b_sym(a.alphabet_size());
  for (SymbolId s = 0; s < a.alphabet_size(); ++s) {
    try {
      b_sym[s] = b.symbol(a.alphabet()[s]);
    } catch (const Error&) {
      throw Error("alphabet mismatch: '" + a.alphabet()[s] + "' missing from second automaton");
    }
  }
  // Pairs over (state or kNoState); kNoState is the implicit dead state.
  auto key = [&](StateId p, StateId q) {
    auto pi = p == kNoState ? a.num_states() : p;
    auto qi = q == kNoState ? b.num_states() : q;
    return pi * (b.num_states() + 1) + qi;
  };
  std::vector<char> seen((a.num_states() + 1) * (b.num_states() + 1), 0);
  std::deque<std::pair<StateId, StateId>> queue{{a.initial(), b.initial()}};
  seen[key(a.initial(), b.initial())] = 1;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    bool fp = p != kNoState && a.is_final(p);
    bool fq = q != kNoState && b.is_final(q);
    if (fp != fq) return false;
    for (SymbolId s = 0; s < a.alphabet_size(); ++s) {
      StateId np = p == kNoState ? kNoState : a.next(p, s).value_or(kNoState);
      StateId nq = q == kNoState ? kNoState : b.next(q, b_sym[s]).value_or(kNoState);
      if (np == kNoState && nq == kNoState) continue;
      if (!seen[key(np, nq)]) {
        seen[key(np, nq)] = 1;
        queue.emplace_back(np, nq);
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

Dfa cyclic_group_automaton(const std::vector<std::uint32_t>& moduli,
                           const std::vector<std::vector<std::uint32_t>>& generators,
                           std::vector<std::string> alphabet) {
  std::size_t states = 1;
  for (auto n : moduli) states *= n;
  // Mixed radix with the first modulus most significant.
  auto decode = [&](std::size_t id) {
    std::vector<std::uint32_t> digits(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      digits[i] = static_cast<std::uint32_t>(id % moduli[i]);
      id /= moduli[i];
    }
    return digits;
  };
  auto encode = [&](const std::vector<std::uint32_t>& digits) {
    std::size_t id = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) id = id * moduli[i] + digits[i];
    return static_cast<StateId>(id);
  };
  Dfa out(std::move(alphabet), states, 0);
  out.set_final(0);
  for (std::size_t q = 0; q < states; ++q) {
    auto digits = decode(q);
    for (SymbolId s = 0; s < generators.size(); ++s) {
      auto moved = digits;
      for (std::size_t i = 0; i < moduli.size(); ++i) moved[i] = (moved[i] + generators[s][i]) % moduli[i];
      out.set_transition(static_cast<StateId>(q), s, encode(moved));
    }
  }
  return out;
}

Dfa generate_zmod(const ZmodFamily& f) {
  if (f.k < 1) throw Error("zmod: modulus must be >= 1");
  if (f.letters.empty()) throw Error("zmod: empty subalphabet");
  auto letters = f.letters;
  std::sort(letters.begin(), letters.end());
  if (std::adjacent_find(letters.begin(), letters.end()) != letters.end())
    throw Error("zmod: repeated letter");
  if (letters.back() >= f.k) throw Error("zmod: letters must lie in 0..k-1");
  std::vector<std::string> alphabet;
  std::vector<std::vector<std::uint32_t>> gens;
  for (auto l : letters) {
    alphabet.push_back(std::to_string(l));
    gens.push_back({l});
  }
  return cyclic_group_automaton({f.k}, gens, std::move(alphabet));
}

Dfa generate_zmod_product(const ZmodProductFamily& f) {
  if (f.moduli.empty()) throw Error("zmod-product: no moduli");
  for (auto n : f.moduli)
    if (n < 1) throw Error("zmod-product: moduli must be >= 1");
  if (f.generators.empty()) throw Error("zmod-product: no generators");
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::string> alphabet;
  for (const auto& g : f.generators) {
    if (g.size() != f.moduli.size()) throw Error("zmod-product: generator arity mismatch");
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] >= f.moduli[i]) throw Error("zmod-product: generator component out of range");
    if (!seen.insert(g).second) throw Error("zmod-product: repeated generator");
    std::string name = "(";
    for (std::size_t i = 0; i < g.size(); ++i) name += (i ? "," : "") + std::to_string(g[i]);
    alphabet.push_back(name + ")");
  }
  return cyclic_group_automaton(f.moduli, f.generators, std::move(alphabet));
}

Dfa generate_shuffle(const ShuffleFamily& f) {
  if (f.n < 1 || f.p < 1) throw Error("shuffle: moduli must be >= 1");
  return cyclic_group_automaton({f.n, f.p}, {{1, 0}, {0, 1}}, {"0", "1"});
}

Dfa generate_two_letter(const TwoLetterHierarchyFamily& f) {
  if (f.k < 5) throw Error("two-letter hierarchy requires k >= 5");
  const std::uint32_t k = f.k;
  Dfa out({"0", "1"}, 6 * k, 0);
  out.set_final(0);
  for (std::uint32_t i = 0; i < 6; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      StateId q = i * k + j;
      out.set_transition(q, 0, ((i + 1) % 6) * k + j);
      out.set_transition(q, 1, ((2 * i) % 6) * k + (j + 1) % k);
    }
  }
  return out;
}

Dfa generate_cascade(const ExponentialCascadeFamily& f) {
  const std::uint32_t layers = f.n + 1;
  const StateId p0 = 5 * layers, top = p0 + 1, bottom = p0 + 2;
  Dfa out({"0", "1", "2", "3", "4"}, 5 * layers + 3, p0);
  out.set_final(top);
  auto state = [](std::uint32_t a, std::uint32_t j) { return static_cast<StateId>(5 * j + a); };
  for (std::uint32_t a = 0; a < 5; ++a) out.set_transition(p0, a, state(a, 0));
  for (std::uint32_t j = 0; j < layers; ++j) {
    for (std::uint32_t a = 0; a < 5; ++a) {
      for (std::uint32_t b = 0; b < 5; ++b) {
        if (j < f.n) {
          out.set_transition(state(a, j), b, state((a + b) % 5, j + 1));
        } else {
          out.set_transition(state(a, j), b, a == b ? top : bottom);
        }
      }
    }
  }
  return out;
}

}  // namespace

Dfa generate(const LanguageFamily& family) {
  return std::visit(
      [](const auto& f) -> Dfa {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ZmodFamily>) return generate_zmod(f);
        else if constexpr (std::is_same_v<T, ZmodProductFamily>) return generate_zmod_product(f);
        else if constexpr (std::is_same_v<T, ShuffleFamily>) return generate_shuffle(f);
        else if constexpr (std::is_same_v<T, TwoLetterHierarchyFamily>) return generate_two_letter(f);
        else return generate_cascade(f);
      },
      family);
}

}  // namespace genuslab
