#include <benchmark/benchmark.h>

#include <numeric>

#include "genuslab/automata.hpp"
#include "genuslab/decide.hpp"
#include "genuslab/embedding.hpp"
#include "genuslab/emulator.hpp"

using namespace genuslab;

namespace {

Multigraph complete_graph(std::size_t n) {
  Multigraph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Dfa zmod_all(std::uint32_t k) {
  std::vector<std::uint32_t> letters(k);
  std::iota(letters.begin(), letters.end(), 0u);
  return generate(ZmodFamily{k, letters});
}

void BM_MinimizeShuffle(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Dfa a = generate(ShuffleFamily{n, n});
  for (auto _ : state) benchmark::DoNotOptimize(minimize(a));
}
BENCHMARK(BM_MinimizeShuffle)->Arg(4)->Arg(16)->Arg(64);

void BM_Planarity(benchmark::State& state) {
  const Multigraph g = underlying_multigraph(generate(ShuffleFamily{32, 32}));
  for (auto _ : state) benchmark::DoNotOptimize(planar(g));
}
BENCHMARK(BM_Planarity);

void BM_GenusComplete(benchmark::State& state) {
  const Multigraph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(genus_exact(g));
}
BENCHMARK(BM_GenusComplete)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_GenusShuffleGrid(benchmark::State& state) {
  const Multigraph g = underlying_multigraph(generate(ShuffleFamily{4, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(genus_exact(g));
}
BENCHMARK(BM_GenusShuffleGrid)->Unit(benchmark::kMillisecond);

void BM_DecideZmod5(benchmark::State& state) {
  const Dfa a = generate(ZmodFamily{5, {0, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(decide_genus(a));
}
BENCHMARK(BM_DecideZmod5)->Unit(benchmark::kMillisecond);

void BM_SearchZ6Planar(benchmark::State& state) {
  const SimpleDigraph base = simplify(underlying_multigraph(minimize(zmod_all(6))));
  for (auto _ : state) {
    Budget budget(1'000'000'000);
    benchmark::DoNotOptimize(search_min_genus_emulator(base, 12, 0, budget));
  }
}
BENCHMARK(BM_SearchZ6Planar)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
