#include "minorembed/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minorembed {

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (!contains(u) || !contains(v)) return false;
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; static_cast<std::size_t>(u) < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::int64_t vertex_count, std::span<const Edge> edges,
                  BuildReport* report) {
  if (vertex_count < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("vertex count exceeds the vertex id range");
  }
  const auto n = static_cast<Vertex>(vertex_count);

  BuildReport local;
  std::vector<Edge> arcs;
  arcs.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  const auto kept = std::unique(arcs.begin(), arcs.end());
  local.duplicates_dropped = static_cast<std::size_t>(arcs.end() - kept) / 2;
  arcs.erase(kept, arcs.end());

  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> neighbors;
  neighbors.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    ++offsets[static_cast<std::size_t>(u) + 1];
    neighbors.push_back(v);
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

  if (report != nullptr) *report = local;
  return Graph(std::move(offsets), std::move(neighbors));
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) {
    throw std::out_of_range("bfs source " + std::to_string(source) + " is not a vertex");
  }
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const int next = dist[static_cast<std::size_t>(u)] + 1;
    for (Vertex v : g.neighbors(u)) {
      auto& dv = dist[static_cast<std::size_t>(v)];
      if (dv == kUnreachable) {
        dv = next;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("diameter of an empty graph");
  int best = 0;
  for (Vertex s = 0; static_cast<std::size_t>(s) < g.vertex_count(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d == kUnreachable) throw std::domain_error("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return std::max(best, 1);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> parts;
  for (Vertex root = 0; static_cast<std::size_t>(root) < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    VertexSet part{root};
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < part.size(); ++head) {
      for (Vertex v : g.neighbors(part[head])) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          part.push_back(v);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

void normalize(VertexSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

}  // namespace minorembed
