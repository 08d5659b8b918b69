#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "genuslab/budget.hpp"
#include "genuslab/graphs.hpp"
#include "genuslab/rational.hpp"

namespace genuslab {

/// Edge-end. Dart 2e sits at edge(e).u, dart 2e+1 at edge(e).v; a self-loop
/// contributes both of its darts to the same vertex.
using DartId = std::uint32_t;

constexpr DartId make_dart(EdgeId e, unsigned end) { return 2 * e + (end & 1u); }
constexpr EdgeId dart_edge(DartId d) { return d >> 1; }
constexpr unsigned dart_end(DartId d) { return d & 1u; }
constexpr DartId twin(DartId d) { return d ^ 1u; }

VertexId dart_vertex(const Multigraph& g, DartId d);

/// Cyclic order of the darts around every vertex.
struct RotationSystem {
  std::vector<std::vector<DartId>> order;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// Throws Error unless every dart of `g` appears exactly once, at its own
/// vertex.
void validate_rotation(const Multigraph& g, const RotationSystem& rot);

/// Face length -> number of faces.
using FaceCensus = std::map<std::size_t, std::size_t>;

struct EmbeddingWitness {
  Multigraph graph;
  RotationSystem rotation;
  FaceCensus census;
  std::size_t genus = 0;

  std::size_t num_faces() const;
};

/// Faces by the next-dart rule (cross to the twin, then take its successor in
/// the rotation). Genus comes from Euler's relation summed over components:
/// 2c - 2g = V - E + F, where an isolated vertex counts one face of length 0.
/// Throws Error on an invalid rotation.
EmbeddingWitness trace_faces(const Multigraph& g, const RotationSystem& rot);

struct GenusInterval {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  /// Embedding realizing `upper`; always present.
  std::optional<EmbeddingWitness> witness;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Minimum orientable genus over all rotation systems.
///
/// Loops and parallel edges are set aside (they never change the genus),
/// pendant trees are peeled, and the remaining simple core is searched by
/// branch and bound over partial rotations. The bound counts faces already
/// closed plus the best the open face chains could still produce given the
/// girth of the core. Symmetry: the first vertex's rotation is fixed up to
/// reflection. Disconnected graphs sum their component genera.
///
/// The witness rotation is rebuilt for the full multigraph and re-traced.
GenusInterval genus_exact(const Multigraph& g, Budget& budget);
GenusInterval genus_exact(const Multigraph& g, std::uint64_t max_nodes = 100'000'000);

enum class KuratowskiKind { none, k5, k33 };

struct PlanarityResult {
  bool planar = false;
  /// Genus-0 embedding when planar.
  std::optional<EmbeddingWitness> embedding;
  /// Edge ids of a Kuratowski subdivision when not planar.
  std::vector<EdgeId> kuratowski_edges;
  KuratowskiKind kuratowski = KuratowskiKind::none;
};

/// Boyer-Myrvold planarity test (linear time) with a certificate either way.
PlanarityResult planar(const Multigraph& g);

/// Planarity of a graph given as an undirected edge list; parallel edges and
/// loops are ignored.
bool is_planar(std::size_t num_vertices, std::span<const std::pair<VertexId, VertexId>> edges);

/// 1 + sum_k ((k(m-1) - 2m) / 4m) f_k: the genus of a cellular embedding of a
/// complete deterministic automaton with n states on m letters, read off its
/// face census. Throws Error unless sum_k k f_k = 2nm and m >= 1.
Rational face_census_genus(std::size_t m, std::size_t n, const FaceCensus& census);

}  // namespace genuslab
