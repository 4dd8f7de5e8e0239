#include <benchmark/benchmark.h>

#include "minorembed/embedder.hpp"
#include "minorembed/generators.hpp"
#include "minorembed/search.hpp"

using namespace minorembed;

namespace {

Graph chimera(int m) { return chimera_graph({m, m, 4, {}}).graph; }

// Weights with a sprinkle of overlaps, as seen mid-run.
VertexWeights mixed_weights(const Graph& g, int base) {
  VertexWeights w(g.vertex_count(), 1.0);
  Rng rng(7);
  for (auto& x : w) {
    if (rng.below(5) == 0) x = base;
  }
  return w;
}

void BM_SsspFromSet(benchmark::State& state) {
  const auto g = chimera(static_cast<int>(state.range(0)));
  const auto w = mixed_weights(g, weight_base(g));
  const VertexSet sources{0, 1, 2, 3};
  SearchWorkspace ws;
  DistanceTable table;
  for (auto _ : state) {
    ws.sssp_from_set(g, w, sources, table);
    benchmark::DoNotOptimize(table.distance.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.vertex_count()));
}
BENCHMARK(BM_SsspFromSet)->Arg(8)->Arg(16);

void BM_Multisource(benchmark::State& state, bool heuristic) {
  const auto g = chimera(16);
  const auto w = mixed_weights(g, weight_base(g));
  const auto n = static_cast<Vertex>(g.vertex_count());
  const std::vector<VertexSet> sources{{0}, {n / 2}, {n - 1}};
  std::vector<double> h;
  if (heuristic) {
    Embedder embedder(g);
    const auto hops = embedder.hop_heuristic(n / 3);
    h.assign(hops.begin(), hops.end());
  }
  SearchWorkspace ws;
  std::uint64_t pops = 0;
  for (auto _ : state) {
    const auto r = ws.multisource(g, w, sources, h);
    pops += r.pops;
    benchmark::DoNotOptimize(r.winner);
  }
  state.counters["pops"] = benchmark::Counter(static_cast<double>(pops), benchmark::Counter::kAvgIterations);
}
BENCHMARK_CAPTURE(BM_Multisource, dijkstra, false);
BENCHMARK_CAPTURE(BM_Multisource, astar, true);

void BM_EmbedClique(benchmark::State& state) {
  const auto g = chimera(8);
  const auto h = complete_graph(static_cast<int>(state.range(0)));
  Embedder embedder(g);
  EmbedParams params;
  params.tries = 1;
  for (auto _ : state) {
    const auto outcome = embedder.run(h, params);
    benchmark::DoNotOptimize(outcome.chains.data());
    ++params.seed;
  }
}
BENCHMARK(BM_EmbedClique)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
