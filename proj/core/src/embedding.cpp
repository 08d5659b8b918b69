#include "genuslab/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "genuslab/error.hpp"

namespace genuslab {

VertexId dart_vertex(const Multigraph& g, DartId d) {
  const Edge& e = g.edge(dart_edge(d));
  return dart_end(d) == 0 ? e.u : e.v;
}

void validate_rotation(const Multigraph& g, const RotationSystem& rot) {
  if (rot.order.size() != g.num_vertices())
    throw Error("rotation lists " + std::to_string(rot.order.size()) + " vertices, graph has " +
                std::to_string(g.num_vertices()));
  std::vector<char> seen(2 * g.num_edges(), 0);
  for (VertexId v = 0; v < rot.order.size(); ++v) {
    for (DartId d : rot.order[v]) {
      if (d >= seen.size())
        throw Error("dart " + std::to_string(d) + " does not exist");
      if (seen[d]) throw Error("dart " + std::to_string(d) + " listed twice");
      if (dart_vertex(g, d) != v)
        throw Error("dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                    " but belongs to vertex " + std::to_string(dart_vertex(g, d)));
      seen[d] = 1;
    }
  }
  for (DartId d = 0; d < seen.size(); ++d)
    if (!seen[d]) throw Error("dart " + std::to_string(d) + " missing from rotation");
}

std::size_t EmbeddingWitness::num_faces() const {
  std::size_t f = 0;
  for (auto [len, count] : census) f += count;
  return f;
}

EmbeddingWitness trace_faces(const Multigraph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  const std::size_t darts = 2 * g.num_edges();
  std::vector<DartId> succ(darts);
  for (const auto& cyc : rot.order)
    for (std::size_t i = 0; i < cyc.size(); ++i) succ[cyc[i]] = cyc[(i + 1) % cyc.size()];

  FaceCensus census;
  std::vector<char> visited(darts, 0);
  std::size_t faces = 0;
  for (DartId start = 0; start < darts; ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (DartId d = start; !visited[d]; d = succ[twin(d)]) {
      visited[d] = 1;
      ++len;
    }
    ++census[len];
    ++faces;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (rot.order[v].empty()) {
      ++census[0];
      ++faces;
    }

  const auto comp = connected_components(g);
  const std::size_t components =
      comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  const auto twice_genus = static_cast<std::int64_t>(2 * components) -
                           static_cast<std::int64_t>(g.num_vertices()) +
                           static_cast<std::int64_t>(g.num_edges()) -
                           static_cast<std::int64_t>(faces);
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw Error("face tracing violated Euler's relation");
  return {g, rot, std::move(census), static_cast<std::size_t>(twice_genus / 2)};
}

// ---------------------------------------------------------------------------
// Exact genus

namespace {

constexpr DartId kNoDart = std::numeric_limits<DartId>::max();

// Connected simple graph with minimum degree >= 2 (the searched core).
struct CoreGraph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

struct CoreResult {
  std::size_t genus = 0;
  std::size_t lower = 0;
  bool exact = false;
  std::vector<std::vector<DartId>> rotation;  // core darts, per core vertex
};

std::size_t core_girth(const CoreGraph& core) {
  Multigraph mg(core.num_vertices);
  for (auto [u, v] : core.edges) mg.add_edge(u, v);
  return girth(mg).value_or(3);
}

// Branch and bound over rotations, one successor assignment at a time.
class RotationSearch {
 public:
  RotationSearch(const CoreGraph& core, Budget& budget)
      : budget_(budget),
        num_vertices_(core.num_vertices),
        num_edges_(core.edges.size()),
        num_darts_(2 * core.edges.size()),
        vertex_of_(num_darts_) {
    for (EdgeId e = 0; e < num_edges_; ++e) {
      vertex_of_[make_dart(e, 0)] = core.edges[e].first;
      vertex_of_[make_dart(e, 1)] = core.edges[e].second;
    }
    girth_ = core_girth(core);
    build_order(core);

    // Euler with faces of length >= girth: F <= 2E / girth.
    lower_ = genus_for_faces(num_darts_ / girth_);
  }

  CoreResult run() {
    // Seed with the rotation that lists darts in processing order.
    std::vector<DartId> seed(num_darts_);
    for (VertexId v = 0; v < num_vertices_; ++v) {
      const auto& ds = darts_at_[v];
      for (std::size_t i = 0; i < ds.size(); ++i) seed[ds[i]] = ds[(i + 1) % ds.size()];
    }
    best_succ_ = seed;
    best_genus_ = genus_for_faces(count_faces(seed));
    if (best_genus_ > lower_) improve_by_local_search();

    succ_.assign(num_darts_, kNoDart);
    placed_.assign(num_darts_, 0);
    other_end_.resize(num_darts_);
    std::iota(other_end_.begin(), other_end_.end(), DartId{0});
    len_.assign(num_darts_, 1);
    closed_ = 0;
    open_chains_ = num_darts_;
    remaining_ = num_darts_;

    if (best_genus_ > lower_) {
      const VertexId v0 = order_[0];
      const DartId first = darts_at_[v0][0];
      placed_[first] = 1;
      descend(0, first, first, 1);
    }

    CoreResult out;
    out.genus = best_genus_;
    out.exact = !aborted_ || best_genus_ == lower_;
    out.lower = out.exact ? best_genus_ : lower_;
    out.rotation.resize(num_vertices_);
    for (VertexId v = 0; v < num_vertices_; ++v) {
      DartId start = darts_at_[v][0];
      DartId d = start;
      do {
        out.rotation[v].push_back(d);
        d = best_succ_[d];
      } while (d != start);
    }
    return out;
  }

 private:
  struct Saved {
    DartId index;
    DartId other_end;
    std::uint32_t len;
  };
  struct LinkRecord {
    bool closed_face = false;
    std::uint32_t face_len = 0;
    Saved writes[2];
  };

  void build_order(const CoreGraph& core) {
    std::vector<std::vector<VertexId>> nbrs(num_vertices_);
    std::vector<std::vector<DartId>> darts(num_vertices_);
    for (EdgeId e = 0; e < num_edges_; ++e) {
      auto [u, v] = core.edges[e];
      nbrs[u].push_back(v);
      nbrs[v].push_back(u);
      darts[u].push_back(make_dart(e, 0));
      darts[v].push_back(make_dart(e, 1));
    }
    std::vector<std::size_t> position(num_vertices_, num_vertices_);
    std::vector<std::size_t> done_nbrs(num_vertices_, 0);
    for (std::size_t step = 0; step < num_vertices_; ++step) {
      VertexId pick = 0;
      bool have = false;
      for (VertexId v = 0; v < num_vertices_; ++v) {
        if (position[v] != num_vertices_) continue;
        if (!have || done_nbrs[v] > done_nbrs[pick] ||
            (done_nbrs[v] == done_nbrs[pick] && darts[v].size() > darts[pick].size())) {
          pick = v;
          have = true;
        }
      }
      position[pick] = step;
      order_.push_back(pick);
      for (VertexId w : nbrs[pick]) ++done_nbrs[w];
    }
    // Darts towards earlier-processed vertices first; ties by dart id.
    darts_at_.resize(num_vertices_);
    for (VertexId v = 0; v < num_vertices_; ++v) {
      auto ds = darts[v];
      std::stable_sort(ds.begin(), ds.end(), [&](DartId a, DartId b) {
        return position[vertex_of_[twin(a)]] < position[vertex_of_[twin(b)]];
      });
      darts_at_[v] = std::move(ds);
    }
  }

  // Annealing over single-dart moves within a rotation. Only tightens the
  // starting upper bound.
  void improve_by_local_search() {
    std::vector<DartId> succ = best_succ_, pred(num_darts_);
    for (DartId d = 0; d < num_darts_; ++d) pred[succ[d]] = d;
    std::vector<VertexId> movable;
    for (VertexId v = 0; v < num_vertices_; ++v)
      if (darts_at_[v].size() >= 3) movable.push_back(v);
    if (movable.empty()) return;

    auto unlink_dart = [&](DartId d) {
      succ[pred[d]] = succ[d];
      pred[succ[d]] = pred[d];
    };
    auto insert_after = [&](DartId d, DartId e) {
      succ[d] = succ[e];
      pred[succ[e]] = d;
      succ[e] = d;
      pred[d] = e;
    };

    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t faces = count_faces(succ);
    const std::size_t moves = 20000 + 4000 * num_darts_;
    const double t0 = 1.5, t1 = 0.05;
    for (std::size_t i = 0; i < moves; ++i) {
      if (!budget_.charge()) {
        aborted_ = true;
        return;
      }
      const VertexId v = movable[rng() % movable.size()];
      const auto& ds = darts_at_[v];
      const DartId d = ds[rng() % ds.size()];
      const DartId e = ds[rng() % ds.size()];
      if (e == d || e == pred[d]) continue;
      const DartId old_pred = pred[d];
      unlink_dart(d);
      insert_after(d, e);
      const std::size_t f = count_faces(succ);
      const double temp = t0 * std::pow(t1 / t0, static_cast<double>(i) / moves);
      if (f < faces && unit(rng) >= std::exp(-static_cast<double>(faces - f) / temp)) {
        unlink_dart(d);
        insert_after(d, old_pred);
        continue;
      }
      faces = f;
      if (genus_for_faces(f) < best_genus_) {
        best_genus_ = genus_for_faces(f);
        best_succ_ = succ;
        if (best_genus_ <= lower_) return;
      }
    }
  }

  std::size_t genus_for_faces(std::size_t faces) const {
    auto twice = 2 - static_cast<std::int64_t>(num_vertices_) +
                 static_cast<std::int64_t>(num_edges_) - static_cast<std::int64_t>(faces);
    if (twice <= 0) return 0;
    return static_cast<std::size_t>((twice + 1) / 2);
  }

  std::size_t count_faces(const std::vector<DartId>& succ) const {
    std::vector<char> seen(num_darts_, 0);
    std::size_t faces = 0;
    for (DartId s = 0; s < num_darts_; ++s) {
      if (seen[s]) continue;
      ++faces;
      for (DartId d = s; !seen[d]; d = succ[twin(d)]) seen[d] = 1;
    }
    return faces;
  }

  // succ[x] = z fixes the face permutation at twin(x): phi(twin(x)) = z.
  LinkRecord link(DartId x, DartId z) {
    LinkRecord rec;
    succ_[x] = z;
    const DartId y = twin(x);
    const DartId head = other_end_[y];
    if (head == z) {
      rec.closed_face = true;
      rec.face_len = len_[y];
      ++closed_;
      --open_chains_;
      remaining_ -= rec.face_len;
      return rec;
    }
    const DartId tail = other_end_[z];
    const std::uint32_t merged = len_[y] + len_[z];
    rec.writes[0] = {head, other_end_[head], len_[head]};
    rec.writes[1] = {tail, other_end_[tail], len_[tail]};
    other_end_[head] = tail;
    len_[head] = merged;
    other_end_[tail] = head;
    len_[tail] = merged;
    --open_chains_;
    return rec;
  }

  void unlink(DartId x, const LinkRecord& rec) {
    succ_[x] = kNoDart;
    if (rec.closed_face) {
      --closed_;
      ++open_chains_;
      remaining_ += rec.face_len;
      return;
    }
    for (int i = 1; i >= 0; --i) {
      other_end_[rec.writes[i].index] = rec.writes[i].other_end;
      len_[rec.writes[i].index] = rec.writes[i].len;
    }
    ++open_chains_;
  }

  bool promising() const {
    std::size_t reachable = closed_ + std::min(open_chains_, remaining_ / girth_);
    auto twice = 2 - static_cast<std::int64_t>(num_vertices_) +
                 static_cast<std::int64_t>(num_edges_) - static_cast<std::int64_t>(reachable);
    if (twice % 2 != 0) ++twice;  // face count has fixed parity
    std::size_t bound = twice <= 0 ? 0 : static_cast<std::size_t>(twice / 2);
    return bound < best_genus_;
  }

  void leaf() {
    std::size_t g = genus_for_faces(closed_);
    if (g < best_genus_) {
      best_genus_ = g;
      best_succ_ = succ_;
      if (best_genus_ <= lower_) finished_ = true;
    }
  }

  // Vertex order_[vi] has `count` darts placed, the last being `cur`.
  void descend(std::size_t vi, DartId first, DartId cur, std::size_t count) {
    const VertexId v = order_[vi];
    const auto& ds = darts_at_[v];
    if (count == ds.size()) {
      if (!budget_.charge()) {
        aborted_ = true;
        return;
      }
      LinkRecord rec = link(cur, first);
      if (promising()) {
        if (vi + 1 == order_.size()) {
          leaf();
        } else {
          const DartId next_first = darts_at_[order_[vi + 1]][0];
          placed_[next_first] = 1;
          descend(vi + 1, next_first, next_first, 1);
          placed_[next_first] = 0;
        }
      }
      unlink(cur, rec);
      return;
    }
    // Successors that close a face go first: good embeddings surface early.
    const DartId closer = other_end_[twin(cur)];
    DartId candidates[1] = {kNoDart};
    if (!placed_[closer] && vertex_of_[closer] == v) candidates[0] = closer;
    for (std::size_t i = 0; i <= ds.size(); ++i) {
      const DartId z = i == 0 ? candidates[0] : ds[i - 1];
      if (z == kNoDart || placed_[z] || (i > 0 && z == candidates[0])) continue;
      // Mirror images have equal genus: orient the first vertex once.
      if (vi == 0 && ds.size() >= 3 && count + 1 == ds.size() && succ_[first] > z) continue;
      if (!budget_.charge()) {
        aborted_ = true;
        return;
      }
      LinkRecord rec = link(cur, z);
      placed_[z] = 1;
      if (promising()) descend(vi, first, z, count + 1);
      placed_[z] = 0;
      unlink(cur, rec);
      if (aborted_ || finished_) return;
    }
  }

  Budget& budget_;
  std::size_t num_vertices_;
  std::size_t num_edges_;
  std::size_t num_darts_;
  std::vector<VertexId> vertex_of_;
  std::size_t girth_ = 3;
  std::vector<VertexId> order_;
  std::vector<std::vector<DartId>> darts_at_;
  std::size_t lower_ = 0;

  std::vector<DartId> succ_;
  std::vector<char> placed_;
  std::vector<DartId> other_end_;
  std::vector<std::uint32_t> len_;
  std::size_t closed_ = 0;
  std::size_t open_chains_ = 0;
  std::size_t remaining_ = 0;

  std::size_t best_genus_ = 0;
  std::vector<DartId> best_succ_;
  bool aborted_ = false;
  bool finished_ = false;
};

// Splits a multigraph into representative simple edges, parallel extras and
// loops; used by both the genus search and the planarity test.
struct EdgeClasses {
  std::vector<EdgeId> representatives;
  std::vector<std::pair<EdgeId, EdgeId>> parallels;  // (extra, representative)
  std::vector<EdgeId> loops;
};

EdgeClasses classify_edges(const Multigraph& g) {
  EdgeClasses out;
  std::map<std::pair<VertexId, VertexId>, EdgeId> rep_of;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      out.loops.push_back(e);
      continue;
    }
    auto [it, fresh] = rep_of.emplace(std::minmax(ed.u, ed.v), e);
    if (fresh) {
      out.representatives.push_back(e);
    } else {
      out.parallels.emplace_back(e, it->second);
    }
  }
  return out;
}

DartId dart_at(const Multigraph& g, EdgeId e, VertexId v) {
  return g.edge(e).u == v ? make_dart(e, 0) : make_dart(e, 1);
}

// Puts parallel extras next to their representative (one new face each) and
// loops at the end of their vertex (one new face each).
void reinsert_extras(const Multigraph& g, const EdgeClasses& classes, RotationSystem& rot) {
  for (auto [extra, rep] : classes.parallels) {
    const Edge& r = g.edge(rep);
    auto& at_u = rot.order[r.u];
    auto pos_u = std::find(at_u.begin(), at_u.end(), make_dart(rep, 0));
    at_u.insert(pos_u + 1, dart_at(g, extra, r.u));
    auto& at_v = rot.order[r.v];
    auto pos_v = std::find(at_v.begin(), at_v.end(), make_dart(rep, 1));
    at_v.insert(pos_v, dart_at(g, extra, r.v));
  }
  for (EdgeId l : classes.loops) {
    auto& at = rot.order[g.edge(l).u];
    at.push_back(make_dart(l, 0));
    at.push_back(make_dart(l, 1));
  }
}

}  // namespace

GenusInterval genus_exact(const Multigraph& g, Budget& budget) {
  const std::uint64_t start_nodes = budget.used();
  const EdgeClasses classes = classify_edges(g);

  // Simple graph on representatives; peel pendant vertices.
  std::vector<std::vector<EdgeId>> inc(g.num_vertices());
  for (EdgeId e : classes.representatives) {
    inc[g.edge(e).u].push_back(e);
    inc[g.edge(e).v].push_back(e);
  }
  std::vector<char> edge_alive(g.num_edges(), 0);
  for (EdgeId e : classes.representatives) edge_alive[e] = 1;
  std::vector<std::size_t> degree(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) degree[v] = inc[v].size();
  std::vector<std::pair<VertexId, EdgeId>> peeled;  // (leaf, its edge)
  std::deque<VertexId> leaves;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (degree[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    VertexId x = leaves.front();
    leaves.pop_front();
    if (degree[x] != 1) continue;
    EdgeId e = *std::find_if(inc[x].begin(), inc[x].end(), [&](EdgeId f) { return edge_alive[f]; });
    edge_alive[e] = 0;
    peeled.emplace_back(x, e);
    VertexId y = g.edge(e).u == x ? g.edge(e).v : g.edge(e).u;
    --degree[x];
    if (--degree[y] == 1) leaves.push_back(y);
  }

  // Remaining core, split into connected components.
  Multigraph core_graph(g.num_vertices());
  std::vector<EdgeId> core_edge_origin;
  for (EdgeId e : classes.representatives)
    if (edge_alive[e]) {
      core_graph.add_edge(g.edge(e).u, g.edge(e).v);
      core_edge_origin.push_back(e);
    }
  const auto comp = connected_components(core_graph);
  const std::size_t num_comp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

  RotationSystem rot;
  rot.order.resize(g.num_vertices());
  GenusInterval out;
  out.exact = true;
  for (std::size_t c = 0; c < num_comp; ++c) {
    CoreGraph core;
    std::vector<VertexId> local(g.num_vertices(), 0), global;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (comp[v] == c) {
        local[v] = static_cast<VertexId>(global.size());
        global.push_back(v);
      }
    std::vector<EdgeId> origin;
    for (EdgeId ce = 0; ce < core_graph.num_edges(); ++ce) {
      const Edge& ed = core_graph.edge(ce);
      if (comp[ed.u] != c) continue;
      core.edges.emplace_back(local[ed.u], local[ed.v]);
      origin.push_back(core_edge_origin[ce]);
    }
    core.num_vertices = global.size();
    if (core.edges.empty()) continue;

    RotationSearch search(core, budget);
    CoreResult res = search.run();
    out.lower += res.lower;
    out.upper += res.genus;
    out.exact = out.exact && res.exact;
    for (VertexId lv = 0; lv < core.num_vertices; ++lv)
      for (DartId cd : res.rotation[lv])
        rot.order[global[lv]].push_back(make_dart(origin[dart_edge(cd)], dart_end(cd)));
  }

  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    auto [leaf, e] = *it;
    const Edge& ed = g.edge(e);
    VertexId parent = ed.u == leaf ? ed.v : ed.u;
    rot.order[parent].push_back(dart_at(g, e, parent));
    rot.order[leaf].push_back(dart_at(g, e, leaf));
  }
  reinsert_extras(g, classes, rot);

  out.witness = trace_faces(g, rot);
  if (out.witness->genus != out.upper)
    throw Error("internal: rebuilt rotation does not realize the searched genus");
  out.budget_exhausted = !out.exact;
  out.nodes = budget.used() - start_nodes;
  return out;
}

GenusInterval genus_exact(const Multigraph& g, std::uint64_t max_nodes) {
  Budget budget(max_nodes);
  return genus_exact(g, budget);
}

// ---------------------------------------------------------------------------
// Planarity

namespace {

using PlanarGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using PlanarEdge = boost::graph_traits<PlanarGraph>::edge_descriptor;

PlanarGraph make_planar_graph(std::size_t n,
                              std::span<const std::pair<VertexId, VertexId>> edges) {
  PlanarGraph pg(n);
  int index = 0;
  for (auto [u, v] : edges) {
    auto [e, ok] = boost::add_edge(u, v, pg);
    boost::put(boost::edge_index, pg, e, index++);
  }
  return pg;
}

}  // namespace

bool is_planar(std::size_t num_vertices, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::set<std::pair<VertexId, VertexId>> unique;
  for (auto [u, v] : edges)
    if (u != v) unique.insert(std::minmax(u, v));
  std::vector<std::pair<VertexId, VertexId>> simple(unique.begin(), unique.end());
  PlanarGraph pg = make_planar_graph(num_vertices, simple);
  return boost::boyer_myrvold_planarity_test(pg);
}

PlanarityResult planar(const Multigraph& g) {
  const EdgeClasses classes = classify_edges(g);
  std::vector<std::pair<VertexId, VertexId>> simple;
  for (EdgeId e : classes.representatives) simple.emplace_back(g.edge(e).u, g.edge(e).v);
  PlanarGraph pg = make_planar_graph(g.num_vertices(), simple);

  using Storage = std::vector<std::vector<PlanarEdge>>;
  Storage storage(g.num_vertices());
  auto embedding = boost::make_iterator_property_map(storage.begin(),
                                                     boost::get(boost::vertex_index, pg));
  std::vector<PlanarEdge> kuratowski;
  const bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = pg, boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  PlanarityResult out;
  out.planar = ok;
  if (ok) {
    RotationSystem rot;
    rot.order.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      for (const PlanarEdge& pe : storage[v]) {
        EdgeId e = classes.representatives[boost::get(boost::edge_index, pg, pe)];
        rot.order[v].push_back(dart_at(g, e, v));
      }
    reinsert_extras(g, classes, rot);
    out.embedding = trace_faces(g, rot);
    if (out.embedding->genus != 0) throw Error("internal: planar embedding traced to genus > 0");
    return out;
  }

  std::map<VertexId, std::size_t> deg;
  for (const PlanarEdge& pe : kuratowski) {
    EdgeId e = classes.representatives[boost::get(boost::edge_index, pg, pe)];
    out.kuratowski_edges.push_back(e);
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::sort(out.kuratowski_edges.begin(), out.kuratowski_edges.end());
  std::size_t branch = 0;
  for (auto [v, d] : deg) branch += d >= 3;
  out.kuratowski = branch == 5 ? KuratowskiKind::k5 : KuratowskiKind::k33;
  return out;
}

// ---------------------------------------------------------------------------

Rational face_census_genus(std::size_t m, std::size_t n, const FaceCensus& census) {
  if (m < 1) throw Error("face census genus needs an alphabet of size >= 1");
  std::size_t dart_total = 0;
  for (auto [len, count] : census) dart_total += len * count;
  if (dart_total != 2 * n * m)
    throw Error("face census has total length " + std::to_string(dart_total) + ", expected 2nm = " +
                std::to_string(2 * n * m));
  const auto mm = static_cast<std::int64_t>(m);
  Rational g(1);
  for (auto [len, count] : census) {
    const auto k = static_cast<std::int64_t>(len);
    g += Rational(k * (mm - 1) - 2 * mm, 4 * mm) * static_cast<std::int64_t>(count);
  }
  return g;
}

}  // namespace genuslab
