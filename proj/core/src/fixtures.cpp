#include "genuslab/fixtures.hpp"

#include "genuslab/fixture_data.hpp"
#include "genuslab/io.hpp"

namespace genuslab::fixtures {

Dfa zmod5_split_automaton() {
  // Rows: targets on letters 0, 1, 2.
  static constexpr StateId kDelta[6][3] = {
      {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 5, 0}, {4, 0, 1}, {5, 0, 1},
  };
  Dfa a({"0", "1", "2"}, 6, 0);
  a.set_final(0);
  for (StateId q = 0; q < 6; ++q)
    for (SymbolId s = 0; s < 3; ++s) a.set_transition(q, s, kDelta[q][s]);
  return a;
}

Dfa cascade0_trie() {
  Dfa a({"0", "1", "2", "3", "4"}, 11, 0);
  for (SymbolId x = 0; x < 5; ++x) {
    a.set_transition(0, x, 1 + x);
    a.set_transition(1 + x, x, 6 + x);
    a.set_final(6 + x);
  }
  return a;
}

EmbeddingWitness shuffle_torus_embedding(std::uint32_t n, std::uint32_t p) {
  const Dfa a = generate(ShuffleFamily{n, p});
  const Multigraph g = underlying_multigraph(a);
  // Edge of the transition (q, letter) is 2q + letter.
  auto state = [&](std::uint32_t i, std::uint32_t j) { return (i % n) * p + (j % p); };
  RotationSystem rot;
  rot.order.resize(g.num_vertices());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < p; ++j) {
      const StateId q = state(i, j);
      const StateId west = state(i, j + p - 1);
      const StateId south = state(i + n - 1, j);
      rot.order[q] = {make_dart(2 * q + 1, 0), make_dart(2 * q, 0), make_dart(2 * west + 1, 1),
                      make_dart(2 * south, 1)};
    }
  return trace_faces(g, rot);
}

EmbeddingWitness k4_planar_embedding() {
  Multigraph g(4);
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  RotationSystem rot;
  rot.order = {
      {make_dart(0, 0), make_dart(2, 0), make_dart(1, 0)},
      {make_dart(3, 0), make_dart(4, 0), make_dart(0, 1)},
      {make_dart(1, 1), make_dart(5, 0), make_dart(3, 1)},
      {make_dart(5, 1), make_dart(2, 1), make_dart(4, 1)},
  };
  return trace_faces(g, rot);
}

const char* z6_planar_emulator_text() { return detail::kZ6PlanarEmulator; }

EmulatorMap z6_planar_emulator() { return io::parse_emulator(detail::kZ6PlanarEmulator); }

std::vector<std::pair<std::string, std::string>> fixture_files() {
  const std::vector<std::uint32_t> all6 = {0, 1, 2, 3, 4, 5};
  const Dfa z6 = minimize(generate(ZmodFamily{6, all6}));
  const EmulatorMap z6_emulator = z6_planar_emulator();
  const Dfa cascade = minimize(generate(ExponentialCascadeFamily{0}));

  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("zmod5_012.dfa", io::format_dfa(minimize(generate(ZmodFamily{5, {0, 1, 2}}))));
  out.emplace_back("zmod5_012_split.dfa", io::format_dfa(zmod5_split_automaton()));
  out.emplace_back("zmod5_12.dfa", io::format_dfa(minimize(generate(ZmodFamily{5, {1, 2}}))));
  out.emplace_back("zmod3_1.dfa", io::format_dfa(minimize(generate(ZmodFamily{3, {1}}))));
  out.emplace_back("zmod6_1.dfa", io::format_dfa(minimize(generate(ZmodFamily{6, {1}}))));
  out.emplace_back("z6.dfa", io::format_dfa(z6));
  out.emplace_back("z6_planar.emu", z6_planar_emulator_text());
  out.emplace_back("z6_planar.dfa", io::format_dfa(lift_to_automaton(z6_emulator, z6)));
  out.emplace_back("shuffle_4_3.dfa", io::format_dfa(generate(ShuffleFamily{4, 3})));
  out.emplace_back("shuffle_4_4.dfa", io::format_dfa(generate(ShuffleFamily{4, 4})));
  out.emplace_back("shuffle_4_4_torus.emb", io::format_embedding(shuffle_torus_embedding(4, 4)));
  out.emplace_back("two_letter_5.dfa", io::format_dfa(generate(TwoLetterHierarchyFamily{5})));
  out.emplace_back("cascade_0.dfa", io::format_dfa(cascade));
  out.emplace_back("cascade_0_trie.dfa", io::format_dfa(cascade0_trie()));
  out.emplace_back("k4_planar.emb", io::format_embedding(k4_planar_embedding()));
  return out;
}

}  // namespace genuslab::fixtures
