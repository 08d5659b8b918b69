#include "genuslab/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "genuslab/error.hpp"

namespace genuslab {

Multigraph::Multigraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_() {
  edges_.reserve(edges.size());
  for (const auto& e : edges) add_edge(e.u, e.v, e.oriented);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v, bool oriented) {
  if (u >= num_vertices_ || v >= num_vertices_)
    throw Error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  edges_.push_back({u, v, oriented});
  return static_cast<EdgeId>(edges_.size() - 1);
}

std::size_t Multigraph::degree(VertexId v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<std::vector<EdgeId>> Multigraph::incidence() const {
  std::vector<std::vector<EdgeId>> inc(num_vertices_);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    inc[edges_[e].u].push_back(e);
    inc[edges_[e].v].push_back(e);
  }
  return inc;
}

SimpleDigraph::SimpleDigraph(std::size_t num_vertices, std::vector<Arc> arcs)
    : num_vertices_(num_vertices), arcs_(std::move(arcs)), out_(num_vertices) {
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    auto [u, v] = arcs_[i];
    if (u >= num_vertices || v >= num_vertices)
      throw Error("arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw Error("simple digraph cannot hold self-loop at " + std::to_string(u));
    if (i > 0 && arcs_[i - 1] == arcs_[i])
      throw Error("duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
    out_[u].push_back(v);
  }
}

bool SimpleDigraph::has_arc(VertexId u, VertexId v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

EdgeId SimpleDigraph::arc_id(VertexId u, VertexId v) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
  if (it == arcs_.end() || *it != Arc{u, v})
    throw Error("no arc " + std::to_string(u) + " -> " + std::to_string(v));
  return static_cast<EdgeId>(it - arcs_.begin());
}

Multigraph SimpleDigraph::to_multigraph() const {
  Multigraph g(num_vertices_);
  for (auto [u, v] : arcs_) g.add_edge(u, v, true);
  return g;
}

std::optional<std::vector<VertexId>> cycle_vertices(const Multigraph& g, const CycleWitness& c) {
  if (c.edges.empty()) return std::nullopt;
  for (EdgeId e : c.edges)
    if (e >= g.num_edges()) return std::nullopt;
  const Edge& first = g.edge(c.edges.front());
  // Try both traversal directions of the first edge.
  for (int flip = 0; flip < 2; ++flip) {
    VertexId start = flip ? first.v : first.u;
    VertexId at = start;
    std::vector<VertexId> seq;
    bool ok = true;
    for (EdgeId e : c.edges) {
      const Edge& ed = g.edge(e);
      seq.push_back(at);
      if (ed.u == at) {
        at = ed.v;
      } else if (ed.v == at) {
        at = ed.u;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && at == start) return seq;
  }
  return std::nullopt;
}

bool is_simple_cycle(const Multigraph& g, const CycleWitness& c) {
  auto verts = cycle_vertices(g, c);
  if (!verts) return false;
  std::set<EdgeId> distinct(c.edges.begin(), c.edges.end());
  if (distinct.size() != c.edges.size()) return false;
  if (!c.directed) return true;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& e = g.edge(c.edges[i]);
    if (!e.oriented || e.u != (*verts)[i]) return false;
  }
  return true;
}

Multigraph underlying_multigraph(const Dfa& a) {
  Multigraph g(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.alphabet_size(); ++s)
      if (auto t = a.next(q, s)) g.add_edge(q, *t, true);
  return g;
}

SimpleDigraph simplify(const Multigraph& g) {
  std::set<SimpleDigraph::Arc> arcs;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (!ed.oriented) throw Error("edge " + std::to_string(e) + " carries no orientation");
    if (!ed.is_loop()) arcs.insert({ed.u, ed.v});
  }
  return SimpleDigraph(g.num_vertices(), {arcs.begin(), arcs.end()});
}

std::optional<CycleWitness> shortest_cycle(const Multigraph& g) {
  // Self-loops and parallel pairs first.
  std::map<std::pair<VertexId, VertexId>, EdgeId> first_on_pair;
  std::optional<CycleWitness> two_cycle;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return CycleWitness{{e}, ed.oriented};
    auto key = std::minmax(ed.u, ed.v);
    auto [it, fresh] = first_on_pair.emplace(key, e);
    if (!fresh && !two_cycle) {
      const Edge& other = g.edge(it->second);
      bool directed = other.oriented && ed.oriented && other.u == ed.v;
      two_cycle = CycleWitness{{it->second, e}, directed};
    }
  }
  if (two_cycle) return two_cycle;

  // Simple graph now: for each edge (u,v), shortest u-v path avoiding it.
  const auto inc = g.incidence();
  std::optional<CycleWitness> best;
  std::vector<std::size_t> dist(g.num_vertices());
  std::vector<EdgeId> via(g.num_vertices());
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  for (EdgeId skip = 0; skip < g.num_edges(); ++skip) {
    const Edge& se = g.edge(skip);
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[se.u] = 0;
    std::deque<VertexId> queue{se.u};
    while (!queue.empty() && dist[se.v] == kUnseen) {
      VertexId x = queue.front();
      queue.pop_front();
      if (best && dist[x] + 2 >= best->length()) break;
      for (EdgeId e : inc[x]) {
        if (e == skip) continue;
        const Edge& ed = g.edge(e);
        VertexId y = ed.u == x ? ed.v : ed.u;
        if (dist[y] != kUnseen) continue;
        dist[y] = dist[x] + 1;
        via[y] = e;
        queue.push_back(y);
      }
    }
    if (dist[se.v] == kUnseen) continue;
    if (best && dist[se.v] + 1 >= best->length()) continue;
    CycleWitness c;
    c.edges.push_back(skip);
    for (VertexId y = se.v; y != se.u;) {
      EdgeId e = via[y];
      c.edges.push_back(e);
      const Edge& ed = g.edge(e);
      y = ed.u == y ? ed.v : ed.u;
    }
    // Walk starts at u, crosses `skip` to v, then returns along the BFS path.
    VertexId at = se.u;
    bool directed = true;
    for (EdgeId e : c.edges) {
      const Edge& ed = g.edge(e);
      if (!ed.oriented || ed.u != at) directed = false;
      at = ed.u == at ? ed.v : ed.u;
    }
    c.directed = directed;
    best = std::move(c);
  }
  return best;
}

std::optional<std::size_t> girth(const Multigraph& g) {
  auto c = shortest_cycle(g);
  if (!c) return std::nullopt;
  return c->length();
}

bool has_no_simple_cycle_up_to(const Multigraph& g, std::size_t k) {
  if (k < 1) throw Error("cycle length bound must be >= 1");
  auto gi = girth(g);
  return !gi || *gi > k;
}

std::vector<std::size_t> connected_components(const Multigraph& g) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(g.num_vertices(), kUnset);
  const auto inc = g.incidence();
  std::size_t next = 0;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (EdgeId e : inc[x]) {
        const Edge& ed = g.edge(e);
        VertexId y = ed.u == x ? ed.v : ed.u;
        if (comp[y] == kUnset) {
          comp[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::optional<std::size_t> directed_girth(const SimpleDigraph& g) {
  std::optional<std::size_t> best;
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.num_vertices());
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      if (best && dist[x] + 1 >= *best) break;
      for (VertexId y : g.out_neighbors(x)) {
        if (y == s) {
          best = dist[x] + 1;
          break;
        }
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return best;
}

}  // namespace genuslab
