#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/automata.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/graphs.hpp"

namespace genuslab::testing {

Multigraph complete_graph(std::size_t n);
Multigraph complete_bipartite(std::size_t a, std::size_t b);

/// Connected multigraphs (loops and parallel edges included) with at most
/// `max_darts` darts and at most 200000 rotation systems, drawn from a fixed
/// seed.
std::vector<Multigraph> small_multigraph_corpus(std::size_t count, std::size_t max_darts,
                                                std::uint64_t seed);

/// Connected simple graphs on 5 to 8 vertices with 8 to 15 edges, under
/// the same rotation cap. Unlike the corpus above these reach genus 1.
std::vector<Multigraph> dense_simple_graph_corpus(std::size_t count, std::uint64_t seed);

/// Minimum genus over every rotation system, by enumeration.
std::size_t brute_force_genus(const Multigraph& g);

/// Shortest edge-simple cycle by trying every edge subset that forms a cycle
/// through DFS; exponential, small graphs only.
std::optional<std::size_t> brute_force_girth(const Multigraph& g);

/// Every word over `alphabet_size` symbols up to `max_len`, shortest first.
std::vector<std::vector<SymbolId>> all_words(std::size_t alphabet_size, std::size_t max_len);

/// First word up to `max_len` on which the two automata disagree.
std::optional<std::vector<SymbolId>> distinguishing_word(const Dfa& a, const Dfa& b,
                                                          std::size_t max_len);

}  // namespace genuslab::testing
