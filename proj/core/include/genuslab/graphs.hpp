#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "genuslab/automata.hpp"

namespace genuslab {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  /// True when the edge remembers its original direction u -> v.
  bool oriented = false;

  bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph: self-loops and parallel edges allowed, edge ids are
/// positions in `edges()`.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t num_vertices, std::vector<Edge> edges = {});

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  EdgeId add_edge(VertexId u, VertexId v, bool oriented = false);

  /// Self-loops count twice.
  std::size_t degree(VertexId v) const;
  /// Edge ids incident to each vertex; a loop is listed twice at its vertex.
  std::vector<std::vector<EdgeId>> incidence() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

/// Directed graph without self-loops or repeated arcs. Arcs are kept sorted;
/// arc ids are positions in `arcs()`.
class SimpleDigraph {
 public:
  using Arc = std::pair<VertexId, VertexId>;

  SimpleDigraph() = default;
  /// Throws Error on a self-loop, a duplicate arc or an endpoint out of range.
  SimpleDigraph(std::size_t num_vertices, std::vector<Arc> arcs);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_.at(v); }
  bool has_arc(VertexId u, VertexId v) const;
  /// Arc id of (u, v); throws Error if absent.
  EdgeId arc_id(VertexId u, VertexId v) const;

  /// One oriented edge per arc, edge id = arc id.
  Multigraph to_multigraph() const;

  friend bool operator==(const SimpleDigraph& a, const SimpleDigraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> out_;
};

/// Closed walk given as edge ids. `directed` means every edge is traversed
/// along its orientation.
struct CycleWitness {
  std::vector<EdgeId> edges;
  bool directed = false;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Vertex sequence v_0 .. v_{k-1} of a closed walk (edge i joins v_i and
/// v_{i+1 mod k}), or nullopt when the edges do not chain into a closed walk.
std::optional<std::vector<VertexId>> cycle_vertices(const Multigraph& g, const CycleWitness& c);

/// Closed walk, no repeated edge, and (when flagged) consistent orientation.
bool is_simple_cycle(const Multigraph& g, const CycleWitness& c);

/// One edge per transition, oriented source -> target, ordered by
/// (state, symbol).
Multigraph underlying_multigraph(const Dfa& a);

/// Drops self-loops and merges parallel arcs. Throws Error if an edge has no
/// orientation.
SimpleDigraph simplify(const Multigraph& g);

/// Shortest edge-simple cycle (undirected sense), or nullopt for a forest.
std::optional<CycleWitness> shortest_cycle(const Multigraph& g);

/// Length of the shortest edge-simple cycle; nullopt stands for infinity.
std::optional<std::size_t> girth(const Multigraph& g);

/// girth(g) > k. Throws Error for k < 1.
bool has_no_simple_cycle_up_to(const Multigraph& g, std::size_t k);

/// Component index of every vertex, numbered by smallest member.
std::vector<std::size_t> connected_components(const Multigraph& g);

/// Length of a shortest directed cycle; nullopt when g is acyclic.
std::optional<std::size_t> directed_girth(const SimpleDigraph& g);

}  // namespace genuslab
