#include <map>
#include <stdexcept>
#include <utility>

#include <gtest/gtest.h>

#include "minorembed/generators.hpp"
#include "minorembed/search.hpp"
#include "oracles.hpp"

using namespace minorembed;

namespace {

std::vector<double> unit_weights(const Graph& g) { return std::vector<double>(g.vertex_count(), 1.0); }

std::vector<double> bfs_heuristic(const Graph& g, Vertex target) {
  const auto hops = bfs_distances(g, target);
  std::vector<double> h(hops.size());
  for (std::size_t v = 0; v < hops.size(); ++v) {
    h[v] = hops[v] == kUnreachable ? static_cast<double>(g.vertex_count()) : hops[v];
  }
  return h;
}

// Replays a recorded path and checks the stored distance bit for bit.
void expect_replay(const DistanceTable& t, const std::vector<double>& w, Vertex v,
                   const VertexSet& sources) {
  const auto path = t.path_to_source(v);
  ASSERT_FALSE(path.empty());
  EXPECT_TRUE(std::binary_search(sources.begin(), sources.end(), path.back()));
  double sum = 0.0;
  for (std::size_t i = path.size() - 1; i-- > 0;) sum += w[path[i]];
  EXPECT_EQ(sum, t.distance[v]);
}

}  // namespace

TEST(WeightedSssp, PathExamples) {
  const auto p3 = path_graph(3);
  const VertexSet a{0};
  auto t = weighted_sssp_from_set(p3, unit_weights(p3), a);
  EXPECT_EQ(t.distance, (std::vector<double>{0, 1, 2}));
  t = weighted_sssp_from_set(p3, std::vector<double>{1, 5, 1}, a);
  EXPECT_EQ(t.distance, (std::vector<double>{0, 5, 6}));
  EXPECT_EQ(t.path_to_source(2), (std::vector<Vertex>{2, 1, 0}));
}

TEST(WeightedSssp, SetSourcesAreAllZero) {
  const auto p5 = path_graph(5);
  const VertexSet s{0, 4};
  const auto t = weighted_sssp_from_set(p5, unit_weights(p5), s);
  EXPECT_EQ(t.distance, (std::vector<double>{0, 1, 2, 1, 0}));
  EXPECT_EQ(t.parent[0], -1);
  EXPECT_EQ(t.parent[4], -1);
}

TEST(WeightedSssp, Errors) {
  const auto p3 = path_graph(3);
  EXPECT_THROW(weighted_sssp_from_set(p3, unit_weights(p3), VertexSet{}), std::invalid_argument);
  EXPECT_THROW(weighted_sssp_from_set(p3, std::vector<double>{1, 1}, VertexSet{0}), std::invalid_argument);
  EXPECT_THROW(weighted_sssp_from_set(p3, unit_weights(p3), VertexSet{3}), std::out_of_range);
}

TEST(WeightedSssp, UnreachableIsInfinite) {
  const std::vector<Edge> edges{{0, 1}};
  const auto g = build_graph(3, edges);
  const auto t = weighted_sssp_from_set(g, unit_weights(g), VertexSet{0});
  EXPECT_EQ(t.distance[2], kInfinity);
  EXPECT_FALSE(t.reached(2));
  EXPECT_TRUE(t.path_to_source(2).empty());
}

TEST(WeightedSssp, MatchesPathEnumeration) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(8, 0.35, rng);
    const auto w = oracle::random_weights(8, 1, 16, rng);
    const auto s = oracle::random_subset(8, 3, rng);
    const auto t = weighted_sssp_from_set(g, w, s);
    EXPECT_EQ(t.distance, oracle::path_enumeration_distances(g, w, s));
  }
}

TEST(WeightedSssp, ParentChainsReplayExactly) {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(14, 0.25, rng);
    std::vector<double> w(14);
    for (auto& x : w) x = std::ldexp(1.0 + static_cast<double>(rng.below(64)), -3);
    const auto s = oracle::random_subset(14, 3, rng);
    const auto t = weighted_sssp_from_set(g, w, s);
    for (Vertex v = 0; v < 14; ++v) {
      if (t.reached(v)) expect_replay(t, w, v, s);
    }
  }
}

TEST(WeightedSssp, MonotoneInWeights) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(10, 0.3, rng);
    auto w = oracle::random_weights(10, 1, 16, rng);
    const auto s = oracle::random_subset(10, 2, rng);
    const auto before = weighted_sssp_from_set(g, w, s).distance;
    w[rng.below(10)] += static_cast<double>(1 + rng.below(20));
    const auto after = weighted_sssp_from_set(g, w, s).distance;
    for (std::size_t v = 0; v < 10; ++v) EXPECT_LE(before[v], after[v]);
  }
}

TEST(WeightedSssp, HopTriangleProperty) {
  const auto g = chimera_graph({4, 4, 4, {}}).graph;
  const auto d = bfs_distances(g, 17);
  for (const auto& [u, v] : g.edges()) EXPECT_LE(std::abs(d[u] - d[v]), 1);
}

TEST(Multisource, PathExamples) {
  const auto p5 = path_graph(5);
  const auto w = unit_weights(p5);
  const std::vector<VertexSet> ends{{0}, {4}};
  auto r = multisource_dijkstra(p5, w, ends);
  EXPECT_EQ(r.winner, 2);
  EXPECT_EQ(r.max_cost, 2.0);
  EXPECT_EQ(r.winner_cost, (std::vector<double>{2, 2}));

  const std::vector<VertexSet> near{{0}, {1}};
  r = multisource_dijkstra(p5, w, near);
  EXPECT_TRUE(r.winner == 0 || r.winner == 1);
  EXPECT_EQ(r.max_cost, 1.0);
}

TEST(Multisource, Unreachable) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  const auto g = build_graph(4, edges);
  const std::vector<VertexSet> split{{0}, {3}};
  const auto r = multisource_dijkstra(g, unit_weights(g), split);
  EXPECT_FALSE(r.reachable());
  EXPECT_EQ(r.winner, -1);
}

TEST(Multisource, Errors) {
  const auto p3 = path_graph(3);
  const auto w = unit_weights(p3);
  EXPECT_THROW(multisource_dijkstra(p3, w, {}), std::invalid_argument);
  const std::vector<VertexSet> with_empty{{0}, {}};
  EXPECT_THROW(multisource_dijkstra(p3, w, with_empty), std::invalid_argument);
  const std::vector<VertexSet> ok{{0}, {2}};
  EXPECT_THROW(multisource_astar(p3, w, ok, std::vector<double>{0, -1, 0}), std::invalid_argument);
  EXPECT_THROW(multisource_astar(p3, w, ok, std::vector<double>{0, kInfinity, 0}),
               std::invalid_argument);
  EXPECT_THROW(multisource_astar(p3, w, ok, std::vector<double>{0, 0}), std::invalid_argument);
}

TEST(Multisource, MinMaxMatchesFullDijkstra) {
  Rng rng(31);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(10, 0.3, rng);
    const auto w = oracle::random_weights(10, 1, 9, rng);
    std::vector<Vertex> picks(10);
    std::iota(picks.begin(), picks.end(), 0);
    rng.shuffle(picks);
    picks.resize(3);
    const std::vector<VertexSet> sources{{picks[0]}, {picks[1]}, {picks[2]}};
    const auto r = multisource_dijkstra(g, w, sources);
    const double expected = oracle::min_max_distance(g, w, picks);
    if (expected == oracle::kInf) {
      EXPECT_FALSE(r.reachable());
      continue;
    }
    ASSERT_TRUE(r.reachable());
    EXPECT_EQ(r.max_cost, expected);
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(Multisource, ReachCostsOfSetSources) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(9, 0.35, rng);
    const auto w = oracle::random_weights(9, 1, 9, rng);
    const std::vector<VertexSet> sources{oracle::random_subset(9, 3, rng),
                                         oracle::random_subset(9, 3, rng)};
    std::vector<std::vector<double>> reach;
    for (const auto& s : sources) reach.push_back(oracle::reach_costs(g, w, s));
    double expected = oracle::kInf;
    for (std::size_t v = 0; v < 9; ++v) expected = std::min(expected, std::max(reach[0][v], reach[1][v]));

    const auto r = multisource_dijkstra(g, w, sources);
    if (expected == oracle::kInf) {
      EXPECT_FALSE(r.reachable());
      continue;
    }
    ASSERT_TRUE(r.reachable());
    EXPECT_EQ(r.max_cost, expected);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(r.winner_cost[i], reach[i][r.winner]);
  }
}

TEST(MultisourceAstar, ZeroHeuristicMatchesDijkstra) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(12, 0.25, rng);
    const auto w = oracle::random_weights(12, 1, 16, rng);
    const std::vector<VertexSet> sources{oracle::random_subset(12, 2, rng),
                                         oracle::random_subset(12, 2, rng),
                                         oracle::random_subset(12, 2, rng)};
    const auto d = multisource_dijkstra(g, w, sources);
    const auto a = multisource_astar(g, w, sources, std::vector<double>(12, 0.0));
    EXPECT_EQ(d.reachable(), a.reachable());
    if (d.reachable()) {
      EXPECT_EQ(d.max_cost, a.max_cost);
      EXPECT_EQ(d.winner, a.winner);
      EXPECT_EQ(d.pops, a.pops);
    }
  }
}

TEST(MultisourceAstar, HeuristicTowardsCentreSavesPops) {
  const auto p5 = path_graph(5);
  const auto w = unit_weights(p5);
  const std::vector<VertexSet> ends{{0}, {4}};
  const auto plain = multisource_astar(p5, w, ends, std::vector<double>(5, 0.0));
  const auto guided = multisource_astar(p5, w, ends, bfs_heuristic(p5, 2));
  EXPECT_EQ(guided.winner, 2);
  EXPECT_LT(guided.pops, plain.pops);
}

TEST(MultisourceAstar, WinnerPathsReplay) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(12, 0.3, rng);
    const auto w = oracle::random_weights(12, 1, 16, rng);
    const std::vector<VertexSet> sources{oracle::random_subset(12, 3, rng),
                                         oracle::random_subset(12, 3, rng)};
    const auto target = static_cast<Vertex>(rng.below(12));
    const auto r = multisource_astar(g, w, sources, bfs_heuristic(g, target));
    if (!r.reachable()) continue;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const auto& s = sources[i];
      const bool member = std::binary_search(s.begin(), s.end(), r.winner);
      if (member) {
        EXPECT_EQ(r.winner_cost[i], w[r.winner]);
      } else {
        expect_replay(r.tables[i], w, r.winner, s);
        EXPECT_EQ(r.winner_cost[i], r.tables[i].distance[r.winner]);
      }
    }
  }
}

TEST(MultisourceAstar, DijkstraOrderAudit) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(12, 0.3, rng);
    const auto w = oracle::random_weights(12, 1, 16, rng);
    const std::vector<VertexSet> sources{oracle::random_subset(12, 2, rng),
                                         oracle::random_subset(12, 2, rng)};
    std::vector<SearchStep> trace;
    const auto r = multisource_dijkstra(g, w, sources, &trace);
    EXPECT_EQ(trace.size(), r.pops);
    std::vector<double> last(sources.size(), 0.0);
    double global = 0.0;
    for (const auto& step : trace) {
      EXPECT_EQ(step.key, step.cost);
      EXPECT_GE(step.cost, last[step.source]);
      EXPECT_GE(step.key, global);
      last[step.source] = step.cost;
      global = step.key;
    }
  }
}

TEST(MultisourceAstar, EachPairPoppedOnce) {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(12, 0.3, rng);
    const auto w = oracle::random_weights(12, 1, 16, rng);
    const std::vector<VertexSet> sources{oracle::random_subset(12, 2, rng),
                                         oracle::random_subset(12, 2, rng),
                                         oracle::random_subset(12, 2, rng)};
    std::vector<SearchStep> trace;
    multisource_astar(g, w, sources, bfs_heuristic(g, static_cast<Vertex>(rng.below(12))), &trace);
    std::map<std::pair<Vertex, std::size_t>, int> seen;
    for (const auto& step : trace) EXPECT_EQ((++seen[{step.vertex, step.source}]), 1);
  }
}

TEST(MultisourceAstar, ExplorationStaysLocal) {
  const auto g = chimera_graph({8, 8, 4, {}}).graph;
  const std::vector<double> w(g.vertex_count(), 1.0);
  const std::vector<VertexSet> sources{{0}, {5}};
  const auto r = multisource_astar(g, w, sources, bfs_heuristic(g, 4));
  ASSERT_TRUE(r.reachable());
  std::size_t explored = 0;
  for (double d : r.tables[0].distance) explored += d != kInfinity;
  EXPECT_LT(explored, g.vertex_count() / 4);
}
