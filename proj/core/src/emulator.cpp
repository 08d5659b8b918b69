#include "genuslab/emulator.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>

#include "genuslab/error.hpp"

namespace genuslab {

EmulatorCheck verify_emulator(const EmulatorMap& m) {
  auto fail = [](std::string why) { return EmulatorCheck{false, std::move(why)}; };
  const std::size_t n = m.base.num_vertices();
  if (m.projection.size() != m.total.num_vertices())
    return fail("projection has " + std::to_string(m.projection.size()) + " entries for " +
                std::to_string(m.total.num_vertices()) + " total vertices");
  std::vector<char> hit(n, 0);
  for (VertexId x = 0; x < m.projection.size(); ++x) {
    if (m.projection[x] >= n)
      return fail("vertex " + std::to_string(x) + " maps outside the base");
    hit[m.projection[x]] = 1;
  }
  for (VertexId u = 0; u < n; ++u)
    if (!hit[u]) return fail("base vertex " + std::to_string(u) + " has an empty fiber");
  for (VertexId x = 0; x < m.total.num_vertices(); ++x) {
    const VertexId u = m.projection[x];
    for (VertexId v : m.base.out_neighbors(u)) {
      const auto& outs = m.total.out_neighbors(x);
      bool lifted = std::any_of(outs.begin(), outs.end(),
                                [&](VertexId y) { return m.projection[y] == v; });
      if (!lifted)
        return fail("arc " + std::to_string(u) + " -> " + std::to_string(v) +
                    " does not lift from vertex " + std::to_string(x));
    }
  }
  return {};
}

EmulatorMap identity_emulator(const SimpleDigraph& g) {
  std::vector<VertexId> id(g.num_vertices());
  std::iota(id.begin(), id.end(), VertexId{0});
  return {g, g, std::move(id)};
}

EmulatorMap compose(const EmulatorMap& upper, const EmulatorMap& lower) {
  if (!(upper.base == lower.total)) throw Error("compose: upper base is not lower total");
  std::vector<VertexId> p(upper.projection.size());
  for (std::size_t x = 0; x < p.size(); ++x) p[x] = lower.projection.at(upper.projection[x]);
  return {lower.base, upper.total, std::move(p)};
}

FiberedProduct fibered_product(const EmulatorMap& p1, const EmulatorMap& p2) {
  if (!(p1.base == p2.base)) throw Error("fibered product needs a common base");
  const SimpleDigraph& base = p1.base;
  std::map<std::pair<VertexId, VertexId>, VertexId> index;
  FiberedProduct out;
  for (VertexId x = 0; x < p1.total.num_vertices(); ++x)
    for (VertexId y = 0; y < p2.total.num_vertices(); ++y)
      if (p1.projection[x] == p2.projection[y]) {
        index.emplace(std::pair{x, y}, static_cast<VertexId>(out.pairs.size()));
        out.pairs.emplace_back(x, y);
      }
  std::vector<SimpleDigraph::Arc> arcs;
  for (VertexId a = 0; a < out.pairs.size(); ++a) {
    auto [x, y] = out.pairs[a];
    for (VertexId x2 : p1.total.out_neighbors(x))
      for (VertexId y2 : p2.total.out_neighbors(y)) {
        if (p1.projection[x2] != p2.projection[y2]) continue;
        if (!base.has_arc(p1.projection[x], p1.projection[x2])) continue;
        arcs.emplace_back(a, index.at({x2, y2}));
      }
  }
  SimpleDigraph total(out.pairs.size(), std::move(arcs));
  std::vector<VertexId> to_base, to_first, to_second;
  for (auto [x, y] : out.pairs) {
    to_base.push_back(p1.projection[x]);
    to_first.push_back(x);
    to_second.push_back(y);
  }
  out.map = {base, total, std::move(to_base)};
  out.first = {p1.total, total, std::move(to_first)};
  out.second = {p2.total, total, std::move(to_second)};
  return out;
}

CycleWitness lift_cycle(const EmulatorMap& m, const CycleWitness& c, VertexId start) {
  const Multigraph base_graph = m.base.to_multigraph();
  if (!c.directed || !is_simple_cycle(base_graph, c))
    throw Error("lift_cycle needs a simple directed cycle of the base");
  const auto verts = *cycle_vertices(base_graph, c);
  const std::size_t k = verts.size();
  if (start >= m.total.num_vertices() || m.projection[start] != verts[0])
    throw Error("start vertex " + std::to_string(start) + " is not over base vertex " +
                std::to_string(verts[0]));

  // A simple base cycle visits each base vertex once, so a total vertex
  // determines its position on the cycle.
  std::vector<std::size_t> seen_at(m.total.num_vertices(), SIZE_MAX);
  std::vector<VertexId> walk{start};
  seen_at[start] = 0;
  for (;;) {
    const VertexId x = walk.back();
    const std::size_t pos = (walk.size() - 1) % k;
    const VertexId want = verts[(pos + 1) % k];
    const auto& outs = m.total.out_neighbors(x);
    auto it = std::find_if(outs.begin(), outs.end(),
                           [&](VertexId y) { return m.projection[y] == want; });
    if (it == outs.end())
      throw Error("arc " + std::to_string(verts[pos]) + " -> " + std::to_string(want) +
                  " does not lift from vertex " + std::to_string(x));
    if (seen_at[*it] != SIZE_MAX) {
      CycleWitness out;
      out.directed = true;
      const std::size_t from = seen_at[*it];
      for (std::size_t i = from; i + 1 < walk.size(); ++i)
        out.edges.push_back(m.total.arc_id(walk[i], walk[i + 1]));
      out.edges.push_back(m.total.arc_id(x, *it));
      return out;
    }
    seen_at[*it] = walk.size();
    walk.push_back(*it);
  }
}

bool girth_preserved(const EmulatorMap& m, std::size_t k) {
  if (!has_no_simple_cycle_up_to(m.base.to_multigraph(), k))
    throw Error("base has a simple cycle of length <= " + std::to_string(k));
  return has_no_simple_cycle_up_to(m.total.to_multigraph(), k);
}

std::vector<FiberSpec> fiber_specs_of_size(std::size_t base_vertices, std::size_t total) {
  std::vector<FiberSpec> out;
  if (base_vertices == 0 || total < base_vertices) return out;
  FiberSpec cur(base_vertices, 1);
  // Lexicographic: earlier coordinates vary slowest.
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i + 1 == base_vertices) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    const std::size_t rest = base_vertices - i - 1;
    for (std::size_t s = 1; s + rest <= left; ++s) {
      cur[i] = s;
      self(self, i + 1, left - s);
    }
  };
  rec(rec, 0, total);
  return out;
}

// ---------------------------------------------------------------------------
// Tight emulator search

namespace {

class TightSearch {
 public:
  TightSearch(const SimpleDigraph& base, const FiberSpec& sizes, std::size_t target,
              Budget& budget)
      : base_(base), sizes_(sizes), target_(target), budget_(budget) {
    const std::size_t n = base.num_vertices();
    offset_.resize(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) offset_[u + 1] = offset_[u] + sizes[u];
    total_ = offset_[n];
    fiber_of_.resize(total_);
    for (VertexId u = 0; u < n; ++u)
      for (std::size_t i = offset_[u]; i < offset_[u + 1]; ++i) fiber_of_[i] = u;

    // Slot (x, v): the single arc from x into fiber v.
    slot_base_.resize(total_ + 1, 0);
    for (std::size_t x = 0; x < total_; ++x)
      slot_base_[x + 1] = slot_base_[x] + base.out_neighbors(fiber_of_[x]).size();
    target_of_.assign(slot_base_[total_], kUnset);
    arcs_total_ = slot_base_[total_];

    // Mutual base pairs u <-> v (u < v) with their unpaired-arc counters.
    for (auto [u, v] : base.arcs())
      if (u < v && base.has_arc(v, u)) {
        pair_index_[{u, v}] = pairs_.size();
        pairs_.push_back({u, v, 0, 0});
      }
    for (const auto& p : pairs_) max_paired_ += pair_cap(p);
    touched_.assign(n, 0);
  }

  // Quick reject before any search: Euler on the best case.
  bool fiber_level_feasible() const { return euler_ok(max_paired_); }

  std::optional<SimpleDigraph> run() {
    if (!fiber_level_feasible()) return std::nullopt;
    if (assign(0)) return found_;
    return std::nullopt;
  }

  bool aborted() const { return aborted_; }

 private:
  static constexpr VertexId kUnset = std::numeric_limits<VertexId>::max();

  struct MutualPair {
    VertexId u, v;
    std::size_t unpaired_uv;  // arcs u-fiber -> v-fiber known to stay unpaired
    std::size_t unpaired_vu;
  };

  std::size_t pair_cap(const MutualPair& p) const {
    return std::min(sizes_[p.u] - p.unpaired_uv, sizes_[p.v] - p.unpaired_vu);
  }

  // Simple edges >= arcs - mutual pairs; a genus-g simple graph on N >= 3
  // vertices has at most 3N - 6 + 6g edges.
  bool euler_ok(std::size_t paired_cap) const {
    if (total_ < 3) return true;
    return arcs_total_ - paired_cap <= 3 * total_ - 6 + 6 * target_;
  }

  std::size_t slot(VertexId x, VertexId v) const {
    const auto& outs = base_.out_neighbors(fiber_of_[x]);
    return slot_base_[x] + (std::lower_bound(outs.begin(), outs.end(), v) - outs.begin());
  }

  // Increments the unpaired counter of arcs from fiber `from` into fiber `to`.
  void mark_unpaired(VertexId from, VertexId to, std::vector<std::pair<std::size_t, int>>& log) {
    auto it = pair_index_.find(std::minmax(from, to));
    MutualPair& p = pairs_[it->second];
    const std::size_t before = pair_cap(p);
    if (from == p.u) {
      ++p.unpaired_uv;
      log.emplace_back(it->second, 0);
    } else {
      ++p.unpaired_vu;
      log.emplace_back(it->second, 1);
    }
    max_paired_ -= before - pair_cap(p);
  }

  void undo_unpaired(const std::vector<std::pair<std::size_t, int>>& log) {
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
      MutualPair& p = pairs_[it->first];
      const std::size_t before = pair_cap(p);
      if (it->second == 0) {
        --p.unpaired_uv;
      } else {
        --p.unpaired_vu;
      }
      max_paired_ += pair_cap(p) - before;
    }
  }

  bool partial_planar(std::size_t upto_slot) const {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t x = 0; x < total_; ++x)
      for (std::size_t s = slot_base_[x]; s < slot_base_[x + 1] && s < upto_slot; ++s)
        edges.emplace_back(static_cast<VertexId>(x), target_of_[s]);
    return is_planar(total_, edges);
  }

  SimpleDigraph current_total() const {
    std::vector<SimpleDigraph::Arc> arcs;
    for (std::size_t x = 0; x < total_; ++x)
      for (std::size_t s = slot_base_[x]; s < slot_base_[x + 1]; ++s)
        arcs.emplace_back(static_cast<VertexId>(x), target_of_[s]);
    return SimpleDigraph(total_, std::move(arcs));
  }

  bool accept_complete() {
    SimpleDigraph total = current_total();
    Multigraph mg = total.to_multigraph();
    if (target_ == 0) {
      if (!planar(mg).planar) return false;
      found_ = std::move(total);
      return true;
    }
    GenusInterval gi = genus_exact(mg, budget_);
    if (gi.upper <= target_) {
      found_ = std::move(total);
      return true;
    }
    if (gi.lower <= target_) aborted_ = true;  // undecided within the budget
    return false;
  }

  // Assigns slot `s` (sources in id order, targets in base out-neighbour order).
  bool assign(std::size_t s) {
    if (s == slot_base_[total_]) return accept_complete();
    const VertexId x = static_cast<VertexId>(
        std::upper_bound(slot_base_.begin(), slot_base_.end(), s) - slot_base_.begin() - 1);
    const VertexId u = fiber_of_[x];
    const VertexId v = base_.out_neighbors(u)[s - slot_base_[x]];

    // Processing x touches it.
    const std::size_t saved_touch_u = touched_[u];
    touched_[u] = std::max<std::size_t>(touched_[u], x - offset_[u] + 1);

    const bool mutual = base_.has_arc(v, u);
    const std::size_t limit = std::min(sizes_[v], touched_[v] + 1);
    bool hit = false;
    for (std::size_t i = 0; i < limit && !hit && !aborted_; ++i) {
      const VertexId y = static_cast<VertexId>(offset_[v] + i);
      if (!budget_.charge()) {
        aborted_ = true;
        break;
      }
      target_of_[s] = y;
      const std::size_t saved_touch_v = touched_[v];
      touched_[v] = std::max(touched_[v], i + 1);

      std::vector<std::pair<std::size_t, int>> log;
      if (mutual) {
        // x -> y pairs only with y -> x.
        const VertexId back = target_of_[slot(y, u)];
        if (back != kUnset && back != x) mark_unpaired(u, v, log);
        // Arcs w -> x from fiber v now pair only if w == y.
        for (std::size_t w = offset_[v]; w < offset_[v + 1]; ++w) {
          if (w == y) continue;
          if (target_of_[slot(static_cast<VertexId>(w), u)] == x) mark_unpaired(v, u, log);
        }
      }

      bool ok = euler_ok(max_paired_);
      // Planarity of the partial graph each time a fiber's last slot is set.
      if (ok && target_ == 0 && s + 1 == slot_base_[offset_[u + 1]] && s + 1 < slot_base_[total_])
        ok = partial_planar(s + 1);
      if (ok) hit = assign(s + 1);

      undo_unpaired(log);
      touched_[v] = saved_touch_v;
      if (!hit) target_of_[s] = kUnset;
    }
    touched_[u] = saved_touch_u;
    return hit;
  }

  const SimpleDigraph& base_;
  const FiberSpec& sizes_;
  std::size_t target_;
  Budget& budget_;

  std::vector<std::size_t> offset_;
  std::size_t total_ = 0;
  std::vector<VertexId> fiber_of_;
  std::vector<std::size_t> slot_base_;
  std::vector<VertexId> target_of_;
  std::size_t arcs_total_ = 0;
  std::map<std::pair<VertexId, VertexId>, std::size_t> pair_index_;
  std::vector<MutualPair> pairs_;
  std::size_t max_paired_ = 0;
  std::vector<std::size_t> touched_;

  std::optional<SimpleDigraph> found_;
  bool aborted_ = false;
};

EmbeddingWitness witness_for(const SimpleDigraph& total, std::size_t target, Budget& budget) {
  Multigraph mg = total.to_multigraph();
  if (target == 0) return *planar(mg).embedding;
  return *genus_exact(mg, budget).witness;
}

}  // namespace

EmulatorSearchResult search_emulator_of_size(const SimpleDigraph& base, std::size_t size,
                                             std::size_t target_genus, Budget& budget) {
  EmulatorSearchResult out;
  const std::uint64_t start = budget.used();
  bool aborted = false;
  for (const FiberSpec& spec : fiber_specs_of_size(base.num_vertices(), size)) {
    TightSearch search(base, spec, target_genus, budget);
    auto total = search.run();
    if (total) {
      std::vector<VertexId> proj;
      for (VertexId u = 0; u < spec.size(); ++u)
        for (std::size_t i = 0; i < spec[u]; ++i) proj.push_back(u);
      out.embedding = witness_for(*total, target_genus, budget);
      out.emulator = EmulatorMap{base, std::move(*total), std::move(proj)};
      out.status = SearchStatus::found;
      out.nodes = budget.used() - start;
      return out;
    }
    if (search.aborted()) {
      aborted = true;
      if (budget.exhausted()) break;
    }
  }
  out.status = aborted ? SearchStatus::budget_exhausted : SearchStatus::exhausted;
  if (!aborted) out.exhausted_sizes.push_back(size);
  out.nodes = budget.used() - start;
  return out;
}

EmulatorSearchResult search_min_genus_emulator(const SimpleDigraph& base, std::size_t max_size,
                                               std::size_t target_genus, Budget& budget) {
  EmulatorSearchResult out;
  const std::uint64_t start = budget.used();
  bool aborted = false;
  for (std::size_t size = base.num_vertices(); size <= max_size; ++size) {
    EmulatorSearchResult r = search_emulator_of_size(base, size, target_genus, budget);
    if (r.status == SearchStatus::found) {
      r.exhausted_sizes = out.exhausted_sizes;
      r.nodes = budget.used() - start;
      return r;
    }
    if (r.status == SearchStatus::exhausted) {
      out.exhausted_sizes.push_back(size);
    } else {
      aborted = true;
      if (budget.exhausted()) break;
    }
  }
  out.status = aborted ? SearchStatus::budget_exhausted : SearchStatus::exhausted;
  out.nodes = budget.used() - start;
  return out;
}

// ---------------------------------------------------------------------------

LiftedAutomaton lift_with_projection(const EmulatorMap& m, const Dfa& a_min) {
  if (!(m.base == simplify(underlying_multigraph(a_min))))
    throw Error("emulator base is not the digraph of the automaton");
  const std::size_t total = m.total.num_vertices();
  std::vector<std::vector<VertexId>> fiber(a_min.num_states());
  for (VertexId x = 0; x < total; ++x) fiber[m.projection[x]].push_back(x);

  Dfa raw(a_min.alphabet(), total, fiber[a_min.initial()].front());
  for (VertexId x = 0; x < total; ++x) {
    const StateId q = m.projection[x];
    if (a_min.is_final(q)) raw.set_final(x);
    for (SymbolId a = 0; a < a_min.alphabet_size(); ++a) {
      auto r = a_min.next(q, a);
      if (!r) continue;
      if (*r == q) {
        raw.set_transition(x, a, x);
        continue;
      }
      const auto& outs = m.total.out_neighbors(x);
      auto it = std::find_if(outs.begin(), outs.end(),
                             [&](VertexId y) { return m.projection[y] == *r; });
      if (it == outs.end())
        throw Error("vertex " + std::to_string(x) + " has no lift for letter " +
                    a_min.alphabet()[a]);
      raw.set_transition(x, a, *it);
    }
  }
  Renumbered t = trim_with_map(raw);
  LiftedAutomaton out;
  out.total_vertex.assign(t.dfa.num_states(), 0);
  for (VertexId x = 0; x < total; ++x)
    if (t.old_to_new[x] != kNoState) out.total_vertex[t.old_to_new[x]] = x;
  for (VertexId x : out.total_vertex) out.projection.push_back(m.projection[x]);
  out.dfa = std::move(t.dfa);
  return out;
}

Dfa lift_to_automaton(const EmulatorMap& m, const Dfa& a_min) {
  return lift_with_projection(m, a_min).dfa;
}

// ---------------------------------------------------------------------------

EmulatorMap random_tight_emulator(const SimpleDigraph& base, const FiberSpec& sizes,
                                  std::mt19937_64& rng) {
  if (sizes.size() != base.num_vertices()) throw Error("fiber spec does not match the base");
  std::vector<std::size_t> offset(sizes.size() + 1, 0);
  for (std::size_t u = 0; u < sizes.size(); ++u) {
    if (sizes[u] == 0) throw Error("fiber sizes must be >= 1");
    offset[u + 1] = offset[u] + sizes[u];
  }
  std::vector<VertexId> proj;
  for (VertexId u = 0; u < sizes.size(); ++u)
    for (std::size_t i = 0; i < sizes[u]; ++i) proj.push_back(u);
  std::vector<SimpleDigraph::Arc> arcs;
  for (VertexId x = 0; x < proj.size(); ++x)
    for (VertexId v : base.out_neighbors(proj[x])) {
      std::uniform_int_distribution<std::size_t> pick(0, sizes[v] - 1);
      arcs.emplace_back(x, static_cast<VertexId>(offset[v] + pick(rng)));
    }
  return {base, SimpleDigraph(proj.size(), std::move(arcs)), std::move(proj)};
}

FiberSpec random_fiber_spec(std::size_t base_vertices, std::size_t max_fiber,
                            std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(1, std::max<std::size_t>(max_fiber, 1));
  FiberSpec out(base_vertices);
  for (auto& s : out) s = pick(rng);
  return out;
}

std::optional<CycleWitness> random_directed_cycle(const SimpleDigraph& g, std::mt19937_64& rng) {
  if (g.num_arcs() == 0) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick_start(0, g.num_vertices() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::size_t> seen_at(g.num_vertices(), SIZE_MAX);
    std::vector<VertexId> walk{static_cast<VertexId>(pick_start(rng))};
    seen_at[walk[0]] = 0;
    for (;;) {
      const auto& outs = g.out_neighbors(walk.back());
      if (outs.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, outs.size() - 1);
      const VertexId y = outs[pick(rng)];
      if (seen_at[y] != SIZE_MAX) {
        CycleWitness c;
        c.directed = true;
        for (std::size_t i = seen_at[y]; i + 1 < walk.size(); ++i)
          c.edges.push_back(g.arc_id(walk[i], walk[i + 1]));
        c.edges.push_back(g.arc_id(walk.back(), y));
        return c;
      }
      seen_at[y] = walk.size();
      walk.push_back(y);
    }
  }
  return std::nullopt;
}

}  // namespace genuslab
