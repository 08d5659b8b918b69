#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "genuslab/automata.hpp"
#include "genuslab/bounds.hpp"
#include "genuslab/decide.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/emulator.hpp"
#include "genuslab/error.hpp"
#include "genuslab/fixtures.hpp"
#include "genuslab/graphs.hpp"
#include "genuslab/io.hpp"
#include "genuslab/properties.hpp"

namespace gl = genuslab;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kInexact = 3 };

struct Options {
  bool json = false;
  std::string budget_text;
  std::uint64_t budget_ms = 0;
};

// Accepts 12345, 1e7 and 10^7.
std::uint64_t parse_count(const std::string& text) {
  const auto bad = CLI::ValidationError("count", "not a non-negative integer: '" + text + "'");
  auto whole = [&](const std::string& t) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(t, &used);
    } catch (const std::logic_error&) {
      throw bad;
    }
    if (used != t.size() || t.empty() || t[0] == '-') throw bad;
    return v;
  };
  auto power = [&](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      if (base != 0 && v > UINT64_MAX / base) throw bad;
      v *= base;
    }
    return v;
  };
  if (auto caret = text.find('^'); caret != std::string::npos)
    return power(whole(text.substr(0, caret)), whole(text.substr(caret + 1)));
  if (auto e = text.find_first_of("eE"); e != std::string::npos)
    return whole(text.substr(0, e)) * power(10, whole(text.substr(e + 1)));
  return whole(text);
}

std::uint64_t budget_nodes(const Options& o, std::uint64_t fallback) {
  if (!o.budget_text.empty()) return parse_count(o.budget_text);
  if (const char* env = std::getenv("GENUSLAB_BUDGET_NODES")) return parse_count(env);
  return fallback;
}

gl::Budget make_budget(const Options& o, std::uint64_t fallback) {
  std::optional<std::chrono::milliseconds> ms;
  if (o.budget_ms > 0) ms = std::chrono::milliseconds(o.budget_ms);
  return gl::Budget(budget_nodes(o, fallback), ms);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw gl::Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw gl::Error("cannot write '" + path.string() + "'");
  out << text;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw gl::ParseError(0, std::string("bad JSON document: ") + e.what());
  }
}

gl::Dfa load_dfa(const std::string& path) {
  const std::string text = read_input(path);
  if (gl::io::looks_like_json(text)) return gl::io::dfa_from_json(parse_json(text));
  return gl::io::parse_dfa(text);
}

gl::EmulatorMap load_emulator(const std::string& path) {
  const std::string text = read_input(path);
  if (gl::io::looks_like_json(text)) return gl::io::emulator_from_json(parse_json(text));
  return gl::io::parse_emulator(text);
}

// A DFA (its multigraph) or a graph file.
struct GraphInput {
  gl::Multigraph graph;
  std::optional<gl::Dfa> dfa;
};

GraphInput load_graph_like(const std::string& path) {
  const std::string text = read_input(path);
  const gl::io::Kind kind = gl::io::detect_kind(text);
  const bool is_json = gl::io::looks_like_json(text);
  if (kind == gl::io::Kind::dfa) {
    gl::Dfa a = is_json ? gl::io::dfa_from_json(parse_json(text)) : gl::io::parse_dfa(text);
    return {gl::underlying_multigraph(a), a};
  }
  if (kind == gl::io::Kind::graph)
    return {is_json ? gl::io::graph_from_json(parse_json(text)) : gl::io::parse_graph(text), {}};
  throw gl::ParseError(0, "expected an automaton or a graph");
}

void emit_dfa(const Options& o, const gl::Dfa& a) {
  if (o.json)
    std::cout << gl::io::dfa_to_json(a).dump(2) << "\n";
  else
    std::cout << gl::io::format_dfa(a);
}

std::string embedding_text(const Options& o, const gl::EmbeddingWitness& w) {
  return o.json ? gl::io::embedding_to_json(w).dump(2) + "\n" : gl::io::format_embedding(w);
}

std::string census_text(const gl::FaceCensus& c) {
  std::string out;
  for (auto [len, count] : c) out += (out.empty() ? "" : " ") + std::to_string(len) + ":" + std::to_string(count);
  return out;
}

json census_json(const gl::FaceCensus& c) {
  json out = json::object();
  for (auto [len, count] : c) out[std::to_string(len)] = count;
  return out;
}

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    out.push_back(static_cast<std::uint32_t>(parse_count(tok)));
  }
  return out;
}

const char* kuratowski_name(gl::KuratowskiKind k) {
  switch (k) {
    case gl::KuratowskiKind::k5: return "K5";
    case gl::KuratowskiKind::k33: return "K33";
    default: return "none";
  }
}

const char* status_name(gl::SearchStatus s) {
  switch (s) {
    case gl::SearchStatus::found: return "found";
    case gl::SearchStatus::exhausted: return "exhausted";
    default: return "budget_exhausted";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus of regular languages: minimization, embeddings, emulators, decisions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  Options opt;
  app.add_flag("--json", opt.json, "Read and write JSON");
  app.add_option("--budget-nodes", opt.budget_text,
                 "Search node budget (e.g. 1000000, 1e7, 10^7); default $GENUSLAB_BUDGET_NODES");
  app.add_option("--budget-ms", opt.budget_ms, "Wall-clock budget in milliseconds")
      ->check(CLI::PositiveNumber);

  int code = kOk;
  std::function<int()> action;

  std::string input, input2, emit, automaton_path;
  std::size_t max_size = 0, genus_target = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::vector<std::string> gen_args;
  std::string family;
  std::int64_t bm = 0, bn = 0, bj = 0;

  auto* minimize = app.add_subcommand("minimize", "Minimal automaton of a DFA");
  minimize->add_option("input", input, "DFA file (stdin if absent)");
  minimize->callback([&] { action = [&] { emit_dfa(opt, gl::minimize(load_dfa(input))); return kOk; }; });

  auto* equivalent = app.add_subcommand("equivalent", "Language equality of two DFAs (exit 1 if different)");
  equivalent->add_option("first", input, "DFA file")->required();
  equivalent->add_option("second", input2, "DFA file")->required();
  equivalent->callback([&] {
    action = [&] {
      const bool eq = gl::equivalent(load_dfa(input), load_dfa(input2));
      if (opt.json)
        std::cout << json{{"equivalent", eq}}.dump() << "\n";
      else
        std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
      return eq ? kOk : kNegative;
    };
  });

  auto* gen = app.add_subcommand("gen", "Generate a family automaton");
  gen->add_option("family", family, "zmod | zmod-product | shuffle | two-letter | cascade")
      ->required()
      ->check(CLI::IsMember({"zmod", "zmod-product", "shuffle", "two-letter", "cascade"}));
  gen->add_option("params", gen_args,
                  "zmod K LETTERS|all; zmod-product MODULI GEN;GEN...; shuffle N P; two-letter K; cascade N");
  gen->callback([&] {
    action = [&] {
      auto need = [&](std::size_t k) {
        if (gen_args.size() != k)
          throw CLI::ValidationError("gen", family + " takes " + std::to_string(k) + " parameters");
      };
      gl::LanguageFamily f;
      if (family == "zmod") {
        need(2);
        auto k = static_cast<std::uint32_t>(parse_count(gen_args[0]));
        std::vector<std::uint32_t> letters;
        if (gen_args[1] == "all") {
          for (std::uint32_t i = 0; i < k; ++i) letters.push_back(i);
        } else {
          letters = parse_list(gen_args[1]);
        }
        f = gl::ZmodFamily{k, letters};
      } else if (family == "zmod-product") {
        need(2);
        gl::ZmodProductFamily p{parse_list(gen_args[0]), {}};
        std::stringstream in(gen_args[1]);
        for (std::string tok; std::getline(in, tok, ';');) p.generators.push_back(parse_list(tok));
        f = p;
      } else if (family == "shuffle") {
        need(2);
        f = gl::ShuffleFamily{static_cast<std::uint32_t>(parse_count(gen_args[0])),
                              static_cast<std::uint32_t>(parse_count(gen_args[1]))};
      } else if (family == "two-letter") {
        need(1);
        f = gl::TwoLetterHierarchyFamily{static_cast<std::uint32_t>(parse_count(gen_args[0]))};
      } else {
        need(1);
        f = gl::ExponentialCascadeFamily{static_cast<std::uint32_t>(parse_count(gen_args[0]))};
      }
      emit_dfa(opt, gl::generate(f));
      return kOk;
    };
  });

  auto* girth = app.add_subcommand("girth", "Shortest simple cycle of a DFA's multigraph or a graph");
  girth->add_option("input", input, "DFA or graph file (stdin if absent)");
  girth->callback([&] {
    action = [&] {
      auto g = gl::girth(load_graph_like(input).graph);
      if (opt.json)
        std::cout << json{{"girth", g ? json(*g) : json("inf")}}.dump() << "\n";
      else
        std::cout << "girth: " << (g ? std::to_string(*g) : "inf") << "\n";
      return kOk;
    };
  });

  auto* bounds = app.add_subcommand("bounds", "Genus bounds for n states on m letters");
  bounds->add_option("--m", bm, "Alphabet size")->required()->check(CLI::Range(1, 1 << 20));
  bounds->add_option("--n", bn, "Number of states")->required()->check(CLI::Range(0, 1 << 30));
  bounds->add_option("--girth", bj, "Girth threshold j (no simple cycle shorter than j)")
      ->check(CLI::Range(1, 1 << 20));
  bounds->callback([&] {
    action = [&] {
      const std::int64_t j = bj > 0 ? bj : gl::rho(bm);
      gl::BoundReport r = gl::bound_report(bm, j, bn);
      if (opt.json) {
        std::cout << json{{"m", r.m}, {"j", r.j}, {"n", r.n},
                          {"lower", gl::to_fraction_string(r.lower)},
                          {"upper", gl::to_fraction_string(r.upper)}}.dump()
                  << "\n";
      } else {
        std::cout << "m: " << r.m << "\nj: " << r.j << "\nn: " << r.n
                  << "\nlower: " << gl::to_display_string(r.lower)
                  << "\nupper: " << gl::to_display_string(r.upper) << "\n";
      }
      return kOk;
    };
  });

  auto* planar = app.add_subcommand("planar", "Planarity test (exit 1 if not planar)");
  planar->add_option("input", input, "DFA or graph file (stdin if absent)");
  planar->add_option("--emit-witness", emit, "Write the planar embedding here");
  planar->callback([&] {
    action = [&] {
      gl::PlanarityResult r = gl::planar(load_graph_like(input).graph);
      if (opt.json) {
        json j{{"planar", r.planar}};
        if (!r.planar) {
          j["kuratowski"] = kuratowski_name(r.kuratowski);
          j["kuratowski_edges"] = r.kuratowski_edges;
        }
        std::cout << j.dump() << "\n";
      } else if (r.planar) {
        std::cout << "planar: yes\n";
      } else {
        std::cout << "planar: no (" << kuratowski_name(r.kuratowski) << " subdivision on "
                  << r.kuratowski_edges.size() << " edges)\n";
      }
      if (r.planar && !emit.empty()) write_file(emit, embedding_text(opt, *r.embedding));
      return r.planar ? kOk : kNegative;
    };
  });

  auto* genus = app.add_subcommand("genus", "Minimum orientable genus (exit 3 if the budget ran out)");
  genus->add_option("input", input, "DFA or graph file (stdin if absent)");
  genus->add_option("--emit-witness", emit, "Write the best embedding here");
  genus->callback([&] {
    action = [&] {
      gl::Budget budget = make_budget(opt, 100'000'000);
      gl::GenusInterval r = gl::genus_exact(load_graph_like(input).graph, budget);
      if (opt.json) {
        std::cout << json{{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact},
                          {"nodes", r.nodes}, {"faces", census_json(r.witness->census)}}.dump()
                  << "\n";
      } else if (r.exact) {
        std::cout << "genus: " << r.upper << " (exact)\nfaces: " << census_text(r.witness->census)
                  << "\n";
      } else {
        std::cout << "genus: " << r.lower << ".." << r.upper << " (budget exhausted after "
                  << r.nodes << " nodes)\n";
      }
      if (!emit.empty()) write_file(emit, embedding_text(opt, *r.witness));
      return r.exact ? kOk : kInexact;
    };
  });

  auto* verify_embedding = app.add_subcommand("verify-embedding", "Re-trace an embedding witness file");
  verify_embedding->add_option("input", input, "Embedding file (stdin if absent)");
  verify_embedding->callback([&] {
    action = [&] {
      const std::string text = read_input(input);
      gl::io::EmbeddingFile f = gl::io::looks_like_json(text)
                                    ? gl::io::embedding_from_json(parse_json(text))
                                    : gl::io::parse_embedding(text);
      gl::EmbeddingWitness w = gl::trace_faces(f.graph, f.rotation);
      const bool agrees = !f.claimed_genus || *f.claimed_genus == w.genus;
      if (opt.json) {
        std::cout << json{{"valid", agrees}, {"genus", w.genus}, {"faces", census_json(w.census)}}.dump()
                  << "\n";
      } else {
        std::cout << "genus: " << w.genus << "\nfaces: " << census_text(w.census) << "\n";
        if (!agrees) std::cout << "claimed genus " << *f.claimed_genus << " does not match\n";
      }
      return agrees ? kOk : kNegative;
    };
  });

  auto* verify_emulator = app.add_subcommand("verify-emulator", "Check an emulator file (exit 1 if invalid)");
  verify_emulator->add_option("input", input, "Emulator file (stdin if absent)");
  verify_emulator->add_option("--automaton", automaton_path,
                              "Also lift over this minimal DFA and check the language");
  verify_emulator->callback([&] {
    action = [&] {
      gl::EmulatorMap m = load_emulator(input);
      gl::EmulatorCheck check = gl::verify_emulator(m);
      json j{{"valid", check.ok}};
      if (!check.ok) j["violation"] = check.violation;
      const bool total_planar = gl::planar(m.total.to_multigraph()).planar;
      j["total_vertices"] = m.total.num_vertices();
      j["total_planar"] = total_planar;
      bool ok = check.ok;
      if (check.ok && !automaton_path.empty()) {
        gl::Dfa a = load_dfa(automaton_path);
        gl::Dfa lifted = gl::lift_to_automaton(m, a);
        const bool eq = gl::equivalent(lifted, a);
        j["lift_states"] = lifted.num_states();
        j["lift_equivalent"] = eq;
        ok = ok && eq;
      }
      if (opt.json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "emulator: " << (check.ok ? "valid" : "invalid: " + check.violation) << "\n"
                  << "total: " << m.total.num_vertices() << " vertices, "
                  << (total_planar ? "planar" : "not planar") << "\n";
        if (j.contains("lift_equivalent"))
          std::cout << "lift: " << j["lift_states"].get<std::size_t>() << " states, "
                    << (j["lift_equivalent"].get<bool>() ? "equivalent" : "NOT equivalent") << "\n";
      }
      return ok ? kOk : kNegative;
    };
  });

  auto* search = app.add_subcommand("emulate-search", "Smallest tight emulator of genus <= g");
  search->add_option("input", input, "DFA (its minimal automaton's digraph) or digraph file");
  search->add_option("--max-size", max_size, "Largest total size")->required();
  search->add_option("--genus", genus_target, "Target genus")->default_val(0);
  search->add_option("--emit-witness", emit, "Write the emulator here");
  search->callback([&] {
    action = [&] {
      const std::string text = read_input(input);
      gl::SimpleDigraph base;
      std::optional<gl::Dfa> a_min;
      if (gl::io::detect_kind(text) == gl::io::Kind::dfa) {
        gl::Dfa a = gl::io::looks_like_json(text) ? gl::io::dfa_from_json(parse_json(text))
                                                  : gl::io::parse_dfa(text);
        a_min = gl::minimize(gl::trim(a));
        base = gl::simplify(gl::underlying_multigraph(*a_min));
      } else {
        base = gl::io::looks_like_json(text) ? gl::io::digraph_from_json(parse_json(text))
                                             : gl::io::parse_digraph(text);
      }
      gl::Budget budget = make_budget(opt, 1'000'000'000);
      gl::EmulatorSearchResult r = gl::search_min_genus_emulator(base, max_size, genus_target, budget);
      json j{{"status", status_name(r.status)}, {"exhausted_sizes", r.exhausted_sizes}, {"nodes", r.nodes}};
      if (r.emulator) {
        j["size"] = r.emulator->total.num_vertices();
        j["genus"] = r.embedding->genus;
        j["emulator"] = gl::io::emulator_to_json(*r.emulator);
      }
      if (opt.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "status: " << status_name(r.status) << "\n";
        std::cout << "sizes exhausted:";
        for (auto s : r.exhausted_sizes) std::cout << " " << s;
        std::cout << "\nnodes: " << r.nodes << "\n";
        if (r.emulator)
          std::cout << "size: " << r.emulator->total.num_vertices() << "\ngenus: " << r.embedding->genus
                    << "\n" << gl::io::format_emulator(*r.emulator);
      }
      if (r.emulator && !emit.empty())
        write_file(emit, opt.json ? gl::io::emulator_to_json(*r.emulator).dump(2) + "\n"
                                  : gl::io::format_emulator(*r.emulator));
      if (r.status == gl::SearchStatus::found) return kOk;
      return r.status == gl::SearchStatus::exhausted ? kNegative : kInexact;
    };
  });

  auto* lift = app.add_subcommand("lift", "Label an emulator as an automaton over a minimal DFA");
  lift->add_option("emulator", input, "Emulator file")->required();
  lift->add_option("--automaton", automaton_path, "Minimal DFA the emulator's base comes from")->required();
  lift->callback([&] {
    action = [&] {
      emit_dfa(opt, gl::lift_to_automaton(load_emulator(input), load_dfa(automaton_path)));
      return kOk;
    };
  });

  auto* decide = app.add_subcommand("decide", "Genus and topological size of a language");
  decide->add_option("input", input, "DFA file (stdin if absent)");
  decide->add_option("--max-size", max_size, "Largest automaton searched outside C(m)");
  decide->add_option("--emit-witness", emit, "Directory for the witness automaton and embedding");
  decide->callback([&] {
    action = [&] {
      gl::DecideOptions d;
      d.budget_nodes = budget_nodes(opt, 10'000'000);
      if (max_size > 0) d.max_size = max_size;
      gl::DecisionReport r = gl::decide_genus(load_dfa(input), d);
      const auto& mc = r.membership;
      json j{{"size_set", r.size_set},
             {"alphabet_size", mc.m},
             {"girth", mc.girth ? json(*mc.girth) : json("inf")},
             {"complete", mc.complete},
             {"in_class", mc.in_class},
             {"genus_lower", r.genus_lower},
             {"genus_upper", r.genus_upper},
             {"genus_exact", r.genus_exact},
             {"topological_size", r.top_size},
             {"topological_size_exact", r.top_exact},
             {"witness_states", r.witness.num_states()},
             {"witness_genus", r.witness_embedding.genus},
             {"budget_exhausted", r.budget_exhausted},
             {"nodes", r.nodes}};
      json rounds = json::array();
      for (const auto& [t, sizes] : r.searched) rounds.push_back({{"target", t}, {"exhausted_sizes", sizes}});
      j["searched"] = rounds;
      if (opt.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "states: " << r.size_set << "\nalphabet size: " << mc.m
                  << "\ngirth: " << (mc.girth ? std::to_string(*mc.girth) : "inf")
                  << "\nin class C(m): " << (mc.in_class ? "yes" : "no") << "\n";
        if (r.genus_exact)
          std::cout << "genus: " << r.genus_upper << " (exact)\n";
        else
          std::cout << "genus: " << r.genus_lower << ".." << r.genus_upper << "\n";
        std::cout << "topological size: " << (r.top_exact ? "" : ">= ") << r.top_size
                  << (r.top_exact ? " (exact)" : "") << "\nwitness: " << r.witness.num_states()
                  << " states, genus " << r.witness_embedding.genus << "\nnodes: " << r.nodes << "\n";
      }
      if (!emit.empty()) {
        const std::filesystem::path dir(emit);
        const char* ext = opt.json ? ".json" : "";
        write_file(dir / (std::string("minimal.dfa") + ext),
                   opt.json ? gl::io::dfa_to_json(r.minimal).dump(2) + "\n" : gl::io::format_dfa(r.minimal));
        write_file(dir / (std::string("witness.dfa") + ext),
                   opt.json ? gl::io::dfa_to_json(r.witness).dump(2) + "\n" : gl::io::format_dfa(r.witness));
        write_file(dir / (std::string("witness.emb") + ext), embedding_text(opt, r.witness_embedding));
        write_file(dir / "report.json", j.dump(2) + "\n");
      }
      return r.exact() ? kOk : kInexact;
    };
  });

  auto* fixtures = app.add_subcommand("fixtures", "Write every example file into a directory");
  std::string fixture_dir = "fixtures";
  fixtures->add_option("dir", fixture_dir, "Output directory")->default_val("fixtures");
  fixtures->callback([&] {
    action = [&] {
      for (const auto& [name, text] : gl::fixtures::fixture_files()) {
        write_file(std::filesystem::path(fixture_dir) / name, text);
        std::cout << (std::filesystem::path(fixture_dir) / name).string() << "\n";
      }
      return kOk;
    };
  });

  auto* check = app.add_subcommand("check-properties", "Randomized property checks (exit 1 on a failure)");
  check->add_option("--seed", seed, "Random seed")->default_val(1);
  check->add_option("--trials", trials, "Trials per property")->default_val(200);
  check->callback([&] {
    action = [&] {
      std::vector<gl::properties::Outcome> all = {
          gl::properties::girth_preservation(seed, trials),
          gl::properties::cycle_lifting(seed, trials),
          gl::properties::fibered_products(seed, trials),
          gl::properties::face_census(seed, trials),
      };
      bool ok = true;
      json j = json::array();
      for (const auto& o : all) {
        ok = ok && o.ok();
        j.push_back({{"name", o.name}, {"trials", o.trials}, {"failures", o.failures},
                     {"first_failure", o.first_failure}});
        if (!opt.json)
          std::cout << (o.ok() ? "ok   " : "FAIL ") << o.name << ": " << o.trials << " trials, "
                    << o.failures << " failures" << (o.first_failure.empty() ? "" : " (" + o.first_failure + ")")
                    << "\n";
      }
      if (opt.json) std::cout << j.dump(2) << "\n";
      return ok ? kOk : kNegative;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    code = action();
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
