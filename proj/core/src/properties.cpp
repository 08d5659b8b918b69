#include "genuslab/properties.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "genuslab/automata.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/emulator.hpp"
#include "genuslab/graphs.hpp"

namespace genuslab::properties {

namespace {

SimpleDigraph digraph_of(const Dfa& a) { return simplify(underlying_multigraph(a)); }

SimpleDigraph directed_cycle(std::size_t n) {
  std::vector<SimpleDigraph::Arc> arcs;
  for (VertexId v = 0; v < n; ++v) arcs.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return SimpleDigraph(n, std::move(arcs));
}

// Automaton digraphs whose multigraph girth exceeds k.
std::vector<SimpleDigraph> girth_bases(std::size_t k) {
  std::vector<SimpleDigraph> all = {
      digraph_of(generate(TwoLetterHierarchyFamily{5})),
      digraph_of(generate(ShuffleFamily{4, 4})),
      digraph_of(generate(ShuffleFamily{5, 4})),
      digraph_of(generate(ZmodFamily{5, {1, 2}})),
      digraph_of(generate(ZmodFamily{7, {1, 3}})),
      directed_cycle(5),
      directed_cycle(8),
  };
  std::vector<SimpleDigraph> out;
  for (auto& g : all)
    if (has_no_simple_cycle_up_to(g.to_multigraph(), k)) out.push_back(std::move(g));
  return out;
}

std::vector<SimpleDigraph> mixed_bases() {
  return {
      digraph_of(generate(ZmodFamily{5, {0, 1, 2}})),
      digraph_of(generate(ZmodFamily{6, {0, 1, 2, 3, 4, 5}})),
      digraph_of(generate(ShuffleFamily{4, 3})),
      digraph_of(generate(TwoLetterHierarchyFamily{5})),
      directed_cycle(3),
      directed_cycle(6),
  };
}

// Adds a few arcs over base arcs, keeping the total simple.
EmulatorMap with_surplus_arcs(EmulatorMap m, std::mt19937_64& rng) {
  std::set<SimpleDigraph::Arc> arcs(m.total.arcs().begin(), m.total.arcs().end());
  std::uniform_int_distribution<std::size_t> pick_x(0, m.total.num_vertices() - 1);
  std::uniform_int_distribution<std::size_t> pick_y(0, m.total.num_vertices() - 1);
  for (int i = 0; i < 3; ++i) {
    VertexId x = static_cast<VertexId>(pick_x(rng));
    VertexId y = static_cast<VertexId>(pick_y(rng));
    if (x != y && m.base.has_arc(m.projection[x], m.projection[y])) arcs.insert({x, y});
  }
  m.total = SimpleDigraph(m.total.num_vertices(), {arcs.begin(), arcs.end()});
  return m;
}

template <class Check>
Outcome girth_trials(std::string name, std::uint64_t seed, std::size_t trials, std::size_t k,
                     Check&& has_short_cycle) {
  Outcome out{std::move(name), 0, 0, {}};
  std::mt19937_64 rng(seed);
  const auto bases = girth_bases(k);
  for (std::size_t t = 0; t < trials; ++t) {
    const SimpleDigraph& base = bases[t % bases.size()];
    EmulatorMap m = random_tight_emulator(base, random_fiber_spec(base.num_vertices(), 3, rng), rng);
    ++out.trials;
    if (auto len = has_short_cycle(m.total)) {
      if (out.failures++ == 0)
        out.first_failure = "trial " + std::to_string(t) + ": total of size " +
                            std::to_string(m.total.num_vertices()) + " has a cycle of length " +
                            std::to_string(*len);
    }
  }
  return out;
}

}  // namespace

Outcome girth_preservation(std::uint64_t seed, std::size_t trials, std::size_t k) {
  return girth_trials("girth preservation", seed, trials, k,
                      [k](const SimpleDigraph& g) -> std::optional<std::size_t> {
                        auto c = girth(g.to_multigraph());
                        if (c && *c <= k) return c;
                        return std::nullopt;
                      });
}

Outcome directed_girth_preservation(std::uint64_t seed, std::size_t trials, std::size_t k) {
  return girth_trials("directed girth preservation", seed, trials, k,
                      [k](const SimpleDigraph& g) -> std::optional<std::size_t> {
                        auto c = directed_girth(g);
                        if (c && *c <= k) return c;
                        return std::nullopt;
                      });
}

Outcome cycle_lifting(std::uint64_t seed, std::size_t trials) {
  Outcome out{"cycle lifting", 0, 0, {}};
  std::mt19937_64 rng(seed);
  const auto bases = mixed_bases();
  std::size_t t = 0;
  while (out.trials < trials) {
    const SimpleDigraph& base = bases[t++ % bases.size()];
    EmulatorMap m = random_tight_emulator(base, random_fiber_spec(base.num_vertices(), 3, rng), rng);
    if (t % 2 == 0) m = with_surplus_arcs(std::move(m), rng);
    auto c = random_directed_cycle(base, rng);
    if (!c) continue;
    const auto verts = *cycle_vertices(base.to_multigraph(), *c);
    std::vector<VertexId> starts;
    for (VertexId x = 0; x < m.projection.size(); ++x)
      if (m.projection[x] == verts[0]) starts.push_back(x);
    std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
    const VertexId start = starts[pick(rng)];
    ++out.trials;
    std::string problem;
    try {
      CycleWitness lifted = lift_cycle(m, *c, start);
      if (!lifted.directed || !is_simple_cycle(m.total.to_multigraph(), lifted))
        problem = "lift is not a simple directed cycle";
      else if (lifted.length() == 0 || lifted.length() % c->length() != 0)
        problem = "lift length " + std::to_string(lifted.length()) + " is not a multiple of " +
                  std::to_string(c->length());
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (!problem.empty() && out.failures++ == 0)
      out.first_failure = "trial " + std::to_string(out.trials - 1) + ": " + problem;
  }
  return out;
}

Outcome fibered_products(std::uint64_t seed, std::size_t trials) {
  Outcome out{"fibered products", 0, 0, {}};
  std::mt19937_64 rng(seed);
  const auto bases = mixed_bases();
  for (std::size_t t = 0; t < trials; ++t) {
    const SimpleDigraph& base = bases[t % bases.size()];
    EmulatorMap p1 = random_tight_emulator(base, random_fiber_spec(base.num_vertices(), 2, rng), rng);
    EmulatorMap p2 = random_tight_emulator(base, random_fiber_spec(base.num_vertices(), 3, rng), rng);
    if (t % 3 == 0) p2 = with_surplus_arcs(std::move(p2), rng);
    ++out.trials;
    std::string problem;
    FiberedProduct fp = fibered_product(p1, p2);
    if (auto c = verify_emulator(fp.first); !c) problem = "first projection: " + c.violation;
    else if (auto c2 = verify_emulator(fp.second); !c2) problem = "second projection: " + c2.violation;
    else if (auto c3 = verify_emulator(fp.map); !c3) problem = "product over base: " + c3.violation;
    for (VertexId z = 0; problem.empty() && z < fp.pairs.size(); ++z)
      if (p1.projection[fp.first.projection[z]] != p2.projection[fp.second.projection[z]])
        problem = "square does not commute at vertex " + std::to_string(z);
    if (!problem.empty() && out.failures++ == 0)
      out.first_failure = "trial " + std::to_string(t) + ": " + problem;
  }
  return out;
}

Outcome face_census(std::uint64_t seed, std::size_t trials) {
  Outcome out{"face census identity", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(t % 5);
    std::vector<std::uint32_t> letters(k);
    for (std::uint32_t i = 0; i < k; ++i) letters[i] = i;
    const Dfa a = generate(ZmodFamily{k, letters});
    const Multigraph g = underlying_multigraph(a);
    RotationSystem rot;
    rot.order.resize(g.num_vertices());
    for (DartId d = 0; d < 2 * g.num_edges(); ++d) rot.order[dart_vertex(g, d)].push_back(d);
    for (auto& cyc : rot.order) std::shuffle(cyc.begin(), cyc.end(), rng);
    const EmbeddingWitness w = trace_faces(g, rot);
    const Rational formula = face_census_genus(k, k, w.census);
    ++out.trials;
    if (formula != Rational(static_cast<std::int64_t>(w.genus)) && out.failures++ == 0)
      out.first_failure = "trial " + std::to_string(t) + ": formula " + to_fraction_string(formula) +
                          ", traced " + std::to_string(w.genus);
  }
  return out;
}

}  // namespace genuslab::properties
