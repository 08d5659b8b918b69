#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace genuslab::testing {

Multigraph complete_graph(std::size_t n) {
  Multigraph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Multigraph complete_bipartite(std::size_t a, std::size_t b) {
  Multigraph g(a + b);
  for (VertexId i = 0; i < a; ++i)
    for (VertexId j = 0; j < b; ++j) g.add_edge(i, static_cast<VertexId>(a + j));
  return g;
}

namespace {

// Keeps the exhaustive oracle affordable: 14 darts on one vertex is 13!.
constexpr std::uint64_t kMaxRotations = 200'000;

std::uint64_t rotation_count(const Multigraph& g) {
  std::uint64_t total = 1;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (std::size_t k = 2; k < g.degree(v); ++k) {
      total *= k;
      if (total > kMaxRotations) return total;
    }
  return total;
}

}  // namespace

std::vector<Multigraph> small_multigraph_corpus(std::size_t count, std::size_t max_darts,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t max_edges = max_darts / 2;
  std::vector<Multigraph> out;
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % std::min<std::size_t>(max_edges + 1, 7);
    const std::size_t e = (n - 1) + rng() % (max_edges - (n - 1) + 1);
    Multigraph g(n);
    for (VertexId v = 1; v < n; ++v) g.add_edge(static_cast<VertexId>(rng() % v), v);
    while (g.num_edges() < e) {
      auto u = static_cast<VertexId>(rng() % n);
      auto v = static_cast<VertexId>(rng() % n);
      if (u == v && rng() % 4 != 0) continue;  // keep loops rare
      g.add_edge(u, v);
    }
    if (rotation_count(g) <= kMaxRotations) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Multigraph> dense_simple_graph_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  while (out.size() < count) {
    const std::size_t n = 5 + rng() % 4;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const std::size_t e = std::min(pairs.size(), 8 + rng() % 8);
    Multigraph g(n);
    for (std::size_t i = 0; i < e; ++i) g.add_edge(pairs[i].first, pairs[i].second);
    const auto comp = connected_components(g);
    if (std::count(comp.begin(), comp.end(), 0u) != static_cast<std::ptrdiff_t>(n)) continue;
    if (rotation_count(g) <= kMaxRotations) out.push_back(std::move(g));
  }
  return out;
}

std::size_t brute_force_genus(const Multigraph& g) {
  std::vector<std::vector<DartId>> at(g.num_vertices());
  for (DartId d = 0; d < 2 * g.num_edges(); ++d) at[dart_vertex(g, d)].push_back(d);

  RotationSystem rot{at};
  std::size_t best = SIZE_MAX;
  // Odometer over vertices; each keeps its first dart fixed.
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == at.size()) {
      best = std::min(best, trace_faces(g, rot).genus);
      return;
    }
    auto& order = rot.order[v];
    if (order.size() <= 2) {
      go(v + 1);
      return;
    }
    std::sort(order.begin() + 1, order.end());
    do go(v + 1);
    while (std::next_permutation(order.begin() + 1, order.end()));
  };
  go(0);
  return best;
}

std::optional<std::size_t> brute_force_girth(const Multigraph& g) {
  std::optional<std::size_t> best;
  auto offer = [&](std::size_t len) {
    if (!best || len < *best) best = len;
  };
  const auto inc = g.incidence();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      offer(1);
      continue;
    }
    // Every vertex-simple path from v back to u that avoids e.
    std::vector<char> on_path(g.num_vertices(), 0);
    std::function<void(VertexId, std::size_t)> walk = [&](VertexId x, std::size_t len) {
      if (x == ed.u) {
        offer(len + 1);
        return;
      }
      on_path[x] = 1;
      for (EdgeId f : inc[x]) {
        if (f == e || g.edge(f).is_loop()) continue;
        const VertexId y = g.edge(f).u == x ? g.edge(f).v : g.edge(f).u;
        if (!on_path[y]) walk(y, len + 1);
      }
      on_path[x] = 0;
    };
    walk(ed.v, 0);
  }
  return best;
}

std::vector<std::vector<SymbolId>> all_words(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<std::vector<SymbolId>> out{{}};
  std::size_t layer_start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_start; i < layer_end; ++i)
      for (SymbolId a = 0; a < alphabet_size; ++a) {
        auto w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    layer_start = layer_end;
  }
  return out;
}

std::optional<std::vector<SymbolId>> distinguishing_word(const Dfa& a, const Dfa& b,
                                                          std::size_t max_len) {
  for (const auto& w : all_words(a.alphabet_size(), max_len))
    if (accepts(a, std::span<const SymbolId>(w)) != accepts(b, std::span<const SymbolId>(w)))
      return w;
  return std::nullopt;
}

}  // namespace genuslab::testing
