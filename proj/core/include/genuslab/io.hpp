#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "genuslab/automata.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/emulator.hpp"
#include "genuslab/graphs.hpp"

namespace genuslab::io {

// Text formats are line based: `key: values`, `#` starts a comment. Parse
// failures throw ParseError carrying the 1-based line number.

/// alphabet: s1 s2 ... / states: n / initial: q / final: q1 ... / trans: q s q'
std::string format_dfa(const Dfa& a);
Dfa parse_dfa(std::string_view text);
nlohmann::json dfa_to_json(const Dfa& a);
Dfa dfa_from_json(const nlohmann::json& j);

/// vertices: n / edge: u v [loop] / arc: u v. Edge ids follow line order.
std::string format_graph(const Multigraph& g);
Multigraph parse_graph(std::string_view text);
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

/// Same format restricted to `arc:` lines.
std::string format_digraph(const SimpleDigraph& g);
SimpleDigraph parse_digraph(std::string_view text);
nlohmann::json digraph_to_json(const SimpleDigraph& g);
SimpleDigraph digraph_from_json(const nlohmann::json& j);

/// rot: v e:end e:end ... (one line per vertex, clockwise).
std::string format_rotation(const RotationSystem& rot);
RotationSystem parse_rotation(std::string_view text, std::size_t num_vertices);

/// Graph lines, then rot lines, then `genus: g`.
struct EmbeddingFile {
  Multigraph graph;
  RotationSystem rotation;
  std::optional<std::size_t> claimed_genus;
};
std::string format_embedding(const EmbeddingWitness& w);
EmbeddingFile parse_embedding(std::string_view text);
nlohmann::json embedding_to_json(const EmbeddingWitness& w);
EmbeddingFile embedding_from_json(const nlohmann::json& j);

/// `base:` section, `total:` section (digraph lines), then `map: v' v`.
std::string format_emulator(const EmulatorMap& m);
EmulatorMap parse_emulator(std::string_view text);
nlohmann::json emulator_to_json(const EmulatorMap& m);
EmulatorMap emulator_from_json(const nlohmann::json& j);

enum class Kind { dfa, graph, embedding, emulator };

/// Guesses the format of a text or JSON document from its keys.
Kind detect_kind(std::string_view text);
bool looks_like_json(std::string_view text);

}  // namespace genuslab::io
