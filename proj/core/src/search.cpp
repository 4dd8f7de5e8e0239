#include "minorembed/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace minorembed {

namespace {

void check_weights(const Graph& g, std::span<const double> weights) {
  if (weights.size() != g.vertex_count()) {
    throw std::invalid_argument("expected " + std::to_string(g.vertex_count()) +
                                " vertex weights, got " + std::to_string(weights.size()));
  }
}

void check_source(const Graph& g, Vertex s) {
  if (!g.contains(s)) {
    throw std::out_of_range("source vertex " + std::to_string(s) + " is not a vertex");
  }
}

}  // namespace

std::vector<Vertex> DistanceTable::path_to_source(Vertex v) const {
  std::vector<Vertex> path;
  if (!reached(v)) return path;
  for (Vertex at = v; at >= 0; at = parent[static_cast<std::size_t>(at)]) path.push_back(at);
  return path;
}

std::uint64_t SearchWorkspace::sssp_from_set(const Graph& g, std::span<const double> weights,
                                             std::span<const Vertex> sources,
                                             DistanceTable& out) {
  check_weights(g, weights);
  if (sources.empty()) throw std::invalid_argument("shortest paths from an empty source set");

  const auto n = g.vertex_count();
  out.distance.assign(n, kInfinity);
  out.parent.assign(n, -1);
  auto& dist = out.distance;

  const auto later = std::greater<>{};
  heap_.clear();
  for (Vertex s : sources) {
    check_source(g, s);
    if (dist[static_cast<std::size_t>(s)] == 0.0) continue;
    dist[static_cast<std::size_t>(s)] = 0.0;
    heap_.emplace_back(0.0, s);
  }
  std::make_heap(heap_.begin(), heap_.end(), later);

  std::uint64_t pops = 0;
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), later);
    const auto [d, v] = heap_.back();
    heap_.pop_back();
    if (d > dist[static_cast<std::size_t>(v)]) continue;
    ++pops;
    for (Vertex u : g.neighbors(v)) {
      const double alt = d + weights[static_cast<std::size_t>(u)];
      auto& du = dist[static_cast<std::size_t>(u)];
      if (alt < du) {
        du = alt;
        out.parent[static_cast<std::size_t>(u)] = v;
        heap_.emplace_back(alt, u);
        std::push_heap(heap_.begin(), heap_.end(), later);
      }
    }
  }
  return pops;
}

MultisourceResult SearchWorkspace::multisource(const Graph& g, std::span<const double> weights,
                                               std::span<const VertexSet> sources,
                                               std::span<const double> heuristic,
                                               std::vector<SearchStep>* trace) {
  check_weights(g, weights);
  if (sources.empty()) throw std::invalid_argument("multisource search needs a source");
  if (!heuristic.empty()) {
    if (heuristic.size() != g.vertex_count()) {
      throw std::invalid_argument("heuristic size does not match the graph");
    }
    for (double h : heuristic) {
      if (!(h >= 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("heuristic values must be finite and non-negative");
      }
    }
  }
  const auto n = g.vertex_count();
  const auto k = sources.size();
  const auto h = [&](Vertex v) {
    return heuristic.empty() ? 0.0 : heuristic[static_cast<std::size_t>(v)];
  };
  const auto slot = [n](std::size_t i, Vertex v) { return i * n + static_cast<std::size_t>(v); };

  MultisourceResult result;
  result.tables.resize(k);
  for (auto& table : result.tables) {
    table.distance.assign(n, kInfinity);
    table.parent.assign(n, -1);
  }
  cost_.assign(k * n, kInfinity);
  reached_.assign(k * n, 0);
  in_source_.assign(k * n, 0);
  reach_count_.assign(n, 0);

  // Orders entries so the heap top is the smallest (key, vertex, source).
  const auto later = [](const Entry& a, const Entry& b) {
    if (a.key != b.key) return a.key > b.key;
    if (a.vertex != b.vertex) return a.vertex > b.vertex;
    return a.source > b.source;
  };
  multi_heap_.clear();
  const auto push = [&](double key, Vertex v, std::size_t i, double cost) {
    multi_heap_.push_back(Entry{key, v, static_cast<std::uint32_t>(i), cost});
    std::push_heap(multi_heap_.begin(), multi_heap_.end(), later);
  };

  for (std::size_t i = 0; i < k; ++i) {
    if (sources[i].empty()) throw std::invalid_argument("multisource search with an empty source");
    for (Vertex s : sources[i]) {
      check_source(g, s);
      in_source_[slot(i, s)] = 1;
      result.tables[i].distance[static_cast<std::size_t>(s)] = 0.0;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    auto& table = result.tables[i];
    for (Vertex s : sources[i]) {
      const double own = weights[static_cast<std::size_t>(s)];
      if (own < cost_[slot(i, s)]) {
        cost_[slot(i, s)] = own;
        push(own + h(s), s, i, own);
      }
      for (Vertex u : g.neighbors(s)) {
        if (in_source_[slot(i, u)]) continue;
        const double alt = weights[static_cast<std::size_t>(u)];
        if (alt < table.distance[static_cast<std::size_t>(u)]) {
          table.distance[static_cast<std::size_t>(u)] = alt;
          table.parent[static_cast<std::size_t>(u)] = s;
          cost_[slot(i, u)] = alt;
          push(alt + h(u), u, i, alt);
        }
      }
    }
  }

  while (!multi_heap_.empty()) {
    std::pop_heap(multi_heap_.begin(), multi_heap_.end(), later);
    const Entry top = multi_heap_.back();
    multi_heap_.pop_back();
    const std::size_t i = top.source;
    const Vertex v = top.vertex;
    if (reached_[slot(i, v)] || top.cost != cost_[slot(i, v)]) continue;

    ++result.pops;
    reached_[slot(i, v)] = 1;
    if (trace != nullptr) trace->push_back(SearchStep{v, i, top.key, top.cost});
    if (++reach_count_[static_cast<std::size_t>(v)] == k) {
      result.winner = v;
      break;
    }
    if (in_source_[slot(i, v)]) continue;  // expanded before the first pop

    auto& table = result.tables[i];
    const double base = table.distance[static_cast<std::size_t>(v)];
    for (Vertex u : g.neighbors(v)) {
      if (in_source_[slot(i, u)]) continue;
      const double alt = base + weights[static_cast<std::size_t>(u)];
      if (alt < table.distance[static_cast<std::size_t>(u)]) {
        table.distance[static_cast<std::size_t>(u)] = alt;
        table.parent[static_cast<std::size_t>(u)] = v;
        cost_[slot(i, u)] = alt;
        push(alt + h(u), u, i, alt);
      }
    }
  }

  if (result.winner >= 0) {
    result.winner_cost.resize(k);
    result.max_cost = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      result.winner_cost[i] = cost_[slot(i, result.winner)];
      result.max_cost = std::max(result.max_cost, result.winner_cost[i]);
    }
  }
  return result;
}

DistanceTable weighted_sssp_from_set(const Graph& g, std::span<const double> weights,
                                     std::span<const Vertex> sources) {
  SearchWorkspace ws;
  DistanceTable table;
  ws.sssp_from_set(g, weights, sources, table);
  return table;
}

MultisourceResult multisource_dijkstra(const Graph& g, std::span<const double> weights,
                                       std::span<const VertexSet> sources,
                                       std::vector<SearchStep>* trace) {
  SearchWorkspace ws;
  return ws.multisource(g, weights, sources, {}, trace);
}

MultisourceResult multisource_astar(const Graph& g, std::span<const double> weights,
                                    std::span<const VertexSet> sources,
                                    std::span<const double> heuristic,
                                    std::vector<SearchStep>* trace) {
  SearchWorkspace ws;
  return ws.multisource(g, weights, sources, heuristic, trace);
}

}  // namespace minorembed
