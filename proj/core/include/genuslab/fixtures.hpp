#pragma once

#include <string>
#include <utility>
#include <vector>

#include "genuslab/automata.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/emulator.hpp"

namespace genuslab::fixtures {

/// Six states for Z_5 on letters {0,1,2}: state 4 of the minimal automaton
/// split in two (one copy entered from 2, the other from 3). Planar.
Dfa zmod5_split_automaton();

/// Trie for {ab : a = b} over Z/5: root, five children, five accepting leaves.
Dfa cascade0_trie();

/// Torus embedding of the multigraph of Shuffle(n, p) as generated (state
/// i*p + j): around each state, out on letter 1, out on letter 0, in on
/// letter 1, in on letter 0. Every face is a grid square.
EmbeddingWitness shuffle_torus_embedding(std::uint32_t n, std::uint32_t p);

/// K_4 (edges 01 02 03 12 13 23) with a planar rotation.
EmbeddingWitness k4_planar_embedding();

/// 12-vertex planar tight emulator of the Z_6 digraph, stored as data.
EmulatorMap z6_planar_emulator();
const char* z6_planar_emulator_text();

/// Every example file, as (file name, contents), in a fixed order.
std::vector<std::pair<std::string, std::string>> fixture_files();

}  // namespace genuslab::fixtures
