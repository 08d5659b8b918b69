#include "genuslab/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "genuslab/error.hpp"

namespace genuslab::io {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::vector<std::string> values;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    std::string head;
    if (!(in >> head)) continue;
    Line line{number, {}, {}};
    if (auto colon = head.find(':'); colon != std::string::npos) {
      line.key = head.substr(0, colon);
      if (colon + 1 < head.size()) line.values.push_back(head.substr(colon + 1));
    } else {
      throw ParseError(number, "expected `key:` at the start of the line, got '" + head + "'");
    }
    for (std::string tok; in >> tok;) line.values.push_back(tok);
    out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t to_uint(const Line& line, const std::string& tok) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line.number, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

void expect_count(const Line& line, std::size_t lo, std::size_t hi) {
  if (line.values.size() < lo || line.values.size() > hi)
    throw ParseError(line.number, "wrong number of values for '" + line.key + "'");
}

template <class F>
auto at_line(std::size_t number, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(number, e.what());
  }
}

Dfa dfa_from_lines(const std::vector<Line>& lines) {
  std::optional<std::vector<std::string>> alphabet;
  std::optional<std::size_t> states;
  std::optional<std::size_t> initial;
  std::size_t header_line = 0;
  for (const Line& l : lines) {
    if (l.key == "alphabet") {
      alphabet = l.values;
      header_line = l.number;
    } else if (l.key == "states") {
      expect_count(l, 1, 1);
      states = to_uint(l, l.values[0]);
    } else if (l.key == "initial") {
      expect_count(l, 1, 1);
      initial = to_uint(l, l.values[0]);
    }
  }
  if (!alphabet) throw ParseError(0, "missing 'alphabet:' line");
  if (!states) throw ParseError(0, "missing 'states:' line");
  if (!initial) throw ParseError(0, "missing 'initial:' line");
  Dfa a = at_line(header_line, [&] {
    return Dfa(*alphabet, *states, static_cast<StateId>(*initial));
  });
  for (const Line& l : lines) {
    if (l.key == "final") {
      for (const auto& tok : l.values) {
        auto q = to_uint(l, tok);
        at_line(l.number, [&] {
          if (q >= a.num_states()) throw Error("final state " + tok + " out of range");
          a.set_final(static_cast<StateId>(q));
          return 0;
        });
      }
    } else if (l.key == "trans") {
      expect_count(l, 3, 3);
      auto q = to_uint(l, l.values[0]);
      auto r = to_uint(l, l.values[2]);
      at_line(l.number, [&] {
        a.set_transition(static_cast<StateId>(q), a.symbol(l.values[1]), static_cast<StateId>(r));
        return 0;
      });
    } else if (l.key != "alphabet" && l.key != "states" && l.key != "initial") {
      throw ParseError(l.number, "unknown key '" + l.key + "' in automaton");
    }
  }
  return a;
}

// Parses graph lines, ignoring keys listed in `skip`.
Multigraph graph_from_lines(const std::vector<Line>& lines, bool arcs_only) {
  std::optional<std::size_t> n;
  for (const Line& l : lines)
    if (l.key == "vertices") {
      expect_count(l, 1, 1);
      n = to_uint(l, l.values[0]);
    }
  if (!n) throw ParseError(0, "missing 'vertices:' line");
  Multigraph g(*n);
  for (const Line& l : lines) {
    if (l.key == "edge" || l.key == "arc") {
      if (arcs_only && l.key == "edge")
        throw ParseError(l.number, "a simple digraph takes 'arc:' lines only");
      expect_count(l, 2, 3);
      auto u = to_uint(l, l.values[0]);
      auto v = to_uint(l, l.values[1]);
      if (l.values.size() == 3 && (l.values[2] != "loop" || u != v))
        throw ParseError(l.number, "unexpected '" + l.values[2] + "'");
      at_line(l.number, [&] {
        return g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), l.key == "arc");
      });
    } else if (l.key != "vertices") {
      throw ParseError(l.number, "unknown key '" + l.key + "' in graph");
    }
  }
  return g;
}

SimpleDigraph digraph_from_graph(const Multigraph& g, std::size_t line) {
  std::vector<SimpleDigraph::Arc> arcs;
  for (const Edge& e : g.edges()) arcs.emplace_back(e.u, e.v);
  return at_line(line, [&] { return SimpleDigraph(g.num_vertices(), std::move(arcs)); });
}

RotationSystem rotation_from_lines(const std::vector<Line>& lines, std::size_t n) {
  RotationSystem rot;
  rot.order.resize(n);
  std::vector<char> given(n, 0);
  for (const Line& l : lines) {
    if (l.key != "rot") throw ParseError(l.number, "unknown key '" + l.key + "' in rotation");
    if (l.values.empty()) throw ParseError(l.number, "rot: needs a vertex");
    auto v = to_uint(l, l.values[0]);
    if (v >= n) throw ParseError(l.number, "vertex " + l.values[0] + " out of range");
    if (given[v]) throw ParseError(l.number, "vertex " + l.values[0] + " listed twice");
    given[v] = 1;
    for (std::size_t i = 1; i < l.values.size(); ++i) {
      const std::string& tok = l.values[i];
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw ParseError(l.number, "dart '" + tok + "' is not of the form edge:end");
      auto e = to_uint(l, tok.substr(0, colon));
      auto end = to_uint(l, tok.substr(colon + 1));
      if (end > 1) throw ParseError(l.number, "dart end must be 0 or 1 in '" + tok + "'");
      rot.order[v].push_back(make_dart(static_cast<EdgeId>(e), static_cast<unsigned>(end)));
    }
  }
  return rot;
}

std::string graph_lines(const Multigraph& g) {
  std::ostringstream out;
  out << "vertices: " << g.num_vertices() << "\n";
  for (const Edge& e : g.edges()) {
    out << (e.oriented ? "arc: " : "edge: ") << e.u << " " << e.v;
    if (!e.oriented && e.is_loop()) out << " loop";
    out << "\n";
  }
  return out.str();
}

template <class T, class F>
T json_guard(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad JSON document: ") + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::string format_dfa(const Dfa& a) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& s : a.alphabet()) out << " " << s;
  out << "\nstates: " << a.num_states() << "\ninitial: " << a.initial() << "\nfinal:";
  for (StateId q : a.finals()) out << " " << q;
  out << "\n";
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.alphabet_size(); ++s)
      if (auto t = a.next(q, s)) out << "trans: " << q << " " << a.alphabet()[s] << " " << *t << "\n";
  return out.str();
}

Dfa parse_dfa(std::string_view text) { return dfa_from_lines(split_lines(text)); }

nlohmann::json dfa_to_json(const Dfa& a) {
  nlohmann::json trans = nlohmann::json::array();
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.alphabet_size(); ++s)
      if (auto t = a.next(q, s)) trans.push_back({q, a.alphabet()[s], *t});
  return {{"alphabet", a.alphabet()},
          {"states", a.num_states()},
          {"initial", a.initial()},
          {"final", a.finals()},
          {"trans", trans}};
}

Dfa dfa_from_json(const nlohmann::json& j) {
  return json_guard<Dfa>([&] {
    try {
      Dfa a(j.at("alphabet").get<std::vector<std::string>>(), j.at("states").get<std::size_t>(),
            j.at("initial").get<StateId>());
      for (StateId q : j.value("final", std::vector<StateId>{})) {
        if (q >= a.num_states()) throw Error("final state out of range");
        a.set_final(q);
      }
      for (const auto& t : j.value("trans", nlohmann::json::array()))
        a.set_transition(t.at(0).get<StateId>(), a.symbol(t.at(1).get<std::string>()),
                         t.at(2).get<StateId>());
      return a;
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(0, e.what());
    }
  });
}

std::string format_graph(const Multigraph& g) { return graph_lines(g); }

Multigraph parse_graph(std::string_view text) { return graph_from_lines(split_lines(text), false); }

nlohmann::json graph_to_json(const Multigraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"u", e.u}, {"v", e.v}, {"kind", e.oriented ? "arc" : "edge"}});
  return {{"vertices", g.num_vertices()}, {"edges", edges}};
}

Multigraph graph_from_json(const nlohmann::json& j) {
  return json_guard<Multigraph>([&] {
    Multigraph g(j.at("vertices").get<std::size_t>());
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      const std::string kind = e.value("kind", "edge");
      if (kind != "edge" && kind != "arc") throw ParseError(0, "unknown edge kind '" + kind + "'");
      try {
        g.add_edge(e.at("u").get<VertexId>(), e.at("v").get<VertexId>(), kind == "arc");
      } catch (const Error& err) {
        throw ParseError(0, err.what());
      }
    }
    return g;
  });
}

std::string format_digraph(const SimpleDigraph& g) { return graph_lines(g.to_multigraph()); }

SimpleDigraph parse_digraph(std::string_view text) {
  return digraph_from_graph(graph_from_lines(split_lines(text), true), 0);
}

nlohmann::json digraph_to_json(const SimpleDigraph& g) { return graph_to_json(g.to_multigraph()); }

SimpleDigraph digraph_from_json(const nlohmann::json& j) {
  Multigraph g = graph_from_json(j);
  for (const Edge& e : g.edges())
    if (!e.oriented) throw ParseError(0, "a simple digraph takes arcs only");
  return digraph_from_graph(g, 0);
}

std::string format_rotation(const RotationSystem& rot) {
  std::ostringstream out;
  for (VertexId v = 0; v < rot.order.size(); ++v) {
    out << "rot: " << v;
    for (DartId d : rot.order[v]) out << " " << dart_edge(d) << ":" << dart_end(d);
    out << "\n";
  }
  return out.str();
}

RotationSystem parse_rotation(std::string_view text, std::size_t num_vertices) {
  return rotation_from_lines(split_lines(text), num_vertices);
}

std::string format_embedding(const EmbeddingWitness& w) {
  return graph_lines(w.graph) + format_rotation(w.rotation) + "genus: " + std::to_string(w.genus) +
         "\n";
}

EmbeddingFile parse_embedding(std::string_view text) {
  std::vector<Line> graph_part, rot_part;
  EmbeddingFile out;
  for (Line& l : split_lines(text)) {
    if (l.key == "rot") {
      rot_part.push_back(std::move(l));
    } else if (l.key == "genus") {
      expect_count(l, 1, 1);
      out.claimed_genus = to_uint(l, l.values[0]);
    } else {
      graph_part.push_back(std::move(l));
    }
  }
  out.graph = graph_from_lines(graph_part, false);
  out.rotation = rotation_from_lines(rot_part, out.graph.num_vertices());
  return out;
}

nlohmann::json embedding_to_json(const EmbeddingWitness& w) {
  nlohmann::json rot = nlohmann::json::array();
  for (const auto& cyc : w.rotation.order) {
    nlohmann::json darts = nlohmann::json::array();
    for (DartId d : cyc) darts.push_back({dart_edge(d), dart_end(d)});
    rot.push_back(darts);
  }
  nlohmann::json census = nlohmann::json::object();
  for (auto [len, count] : w.census) census[std::to_string(len)] = count;
  nlohmann::json j = graph_to_json(w.graph);
  j["rot"] = rot;
  j["genus"] = w.genus;
  j["faces"] = census;
  return j;
}

EmbeddingFile embedding_from_json(const nlohmann::json& j) {
  return json_guard<EmbeddingFile>([&] {
    EmbeddingFile out;
    out.graph = graph_from_json(j);
    out.rotation.order.resize(out.graph.num_vertices());
    const auto& rot = j.at("rot");
    if (rot.size() != out.graph.num_vertices())
      throw ParseError(0, "rot lists " + std::to_string(rot.size()) + " vertices");
    for (std::size_t v = 0; v < rot.size(); ++v)
      for (const auto& d : rot[v]) {
        auto end = d.at(1).get<unsigned>();
        if (end > 1) throw ParseError(0, "dart end must be 0 or 1");
        out.rotation.order[v].push_back(make_dart(d.at(0).get<EdgeId>(), end));
      }
    if (j.contains("genus")) out.claimed_genus = j["genus"].get<std::size_t>();
    return out;
  });
}

std::string format_emulator(const EmulatorMap& m) {
  std::ostringstream out;
  out << "base:\n" << format_digraph(m.base) << "total:\n" << format_digraph(m.total);
  for (VertexId x = 0; x < m.projection.size(); ++x) out << "map: " << x << " " << m.projection[x] << "\n";
  return out.str();
}

EmulatorMap parse_emulator(std::string_view text) {
  std::vector<Line> base_part, total_part, map_part;
  std::vector<Line>* section = nullptr;
  std::size_t base_line = 0, total_line = 0;
  for (Line& l : split_lines(text)) {
    if (l.key == "base" || l.key == "total") {
      if (!l.values.empty()) throw ParseError(l.number, "section header takes no values");
      section = l.key == "base" ? &base_part : &total_part;
      (l.key == "base" ? base_line : total_line) = l.number;
    } else if (l.key == "map") {
      map_part.push_back(std::move(l));
    } else {
      if (!section) throw ParseError(l.number, "graph line before a 'base:' or 'total:' header");
      section->push_back(std::move(l));
    }
  }
  if (!base_line) throw ParseError(0, "missing 'base:' section");
  if (!total_line) throw ParseError(0, "missing 'total:' section");
  EmulatorMap m;
  m.base = digraph_from_graph(graph_from_lines(base_part, true), base_line);
  m.total = digraph_from_graph(graph_from_lines(total_part, true), total_line);
  m.projection.assign(m.total.num_vertices(), 0);
  std::vector<char> given(m.total.num_vertices(), 0);
  for (const Line& l : map_part) {
    expect_count(l, 2, 2);
    auto x = to_uint(l, l.values[0]);
    auto v = to_uint(l, l.values[1]);
    if (x >= m.total.num_vertices()) throw ParseError(l.number, "total vertex out of range");
    if (v >= m.base.num_vertices()) throw ParseError(l.number, "base vertex out of range");
    if (given[x]) throw ParseError(l.number, "vertex " + l.values[0] + " mapped twice");
    given[x] = 1;
    m.projection[x] = static_cast<VertexId>(v);
  }
  for (VertexId x = 0; x < given.size(); ++x)
    if (!given[x]) throw ParseError(0, "total vertex " + std::to_string(x) + " has no 'map:' line");
  return m;
}

nlohmann::json emulator_to_json(const EmulatorMap& m) {
  return {{"base", digraph_to_json(m.base)},
          {"total", digraph_to_json(m.total)},
          {"map", m.projection}};
}

EmulatorMap emulator_from_json(const nlohmann::json& j) {
  return json_guard<EmulatorMap>([&] {
    EmulatorMap m;
    m.base = digraph_from_json(j.at("base"));
    m.total = digraph_from_json(j.at("total"));
    m.projection = j.at("map").get<std::vector<VertexId>>();
    if (m.projection.size() != m.total.num_vertices())
      throw ParseError(0, "map needs one entry per total vertex");
    for (VertexId v : m.projection)
      if (v >= m.base.num_vertices()) throw ParseError(0, "map target out of range");
    return m;
  });
}

bool looks_like_json(std::string_view text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string_view::npos && text[p] == '{';
}

Kind detect_kind(std::string_view text) {
  if (looks_like_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, std::string("bad JSON document: ") + e.what());
    }
    if (j.contains("alphabet")) return Kind::dfa;
    if (j.contains("base")) return Kind::emulator;
    if (j.contains("rot")) return Kind::embedding;
    if (j.contains("vertices")) return Kind::graph;
    throw ParseError(0, "cannot tell what this JSON document describes");
  }
  bool rot = false;
  for (const Line& l : split_lines(text)) {
    if (l.key == "alphabet" || l.key == "trans" || l.key == "states") return Kind::dfa;
    if (l.key == "base" || l.key == "total") return Kind::emulator;
    rot = rot || l.key == "rot";
  }
  return rot ? Kind::embedding : Kind::graph;
}

}  // namespace genuslab::io
