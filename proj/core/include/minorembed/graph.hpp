#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace minorembed {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids of one graph.
using VertexSet = std::vector<Vertex>;

/// Hop distance reported for vertices that cannot be reached.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// What build_graph discarded while normalizing the input edge list.
struct BuildReport {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Immutable undirected simple graph stored as compressed adjacency lists.
///
/// Vertices are the dense ids 0..vertex_count()-1 and every adjacency list is
/// sorted ascending. Instances are only created through build_graph, which
/// guarantees symmetry and the absence of loops and parallel edges.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[static_cast<std::size_t>(v)],
            neighbors_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
  }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < vertex_count();
  }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(std::int64_t, std::span<const Edge>, BuildReport*);

  Graph(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors)
      : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {}

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
};

/// Builds a simple graph. Reversed duplicates and repeated pairs collapse to
/// one edge, self-loops are dropped; both are counted in `report` if given.
/// Throws std::invalid_argument for a negative vertex count and
/// std::out_of_range for an endpoint outside [0, vertex_count).
Graph build_graph(std::int64_t vertex_count, std::span<const Edge> edges,
                  BuildReport* report = nullptr);

/// Hop counts from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Largest hop distance between two vertices. A single vertex has diameter 1
/// so that powers of the diameter never collapse to zero. Throws
/// std::domain_error when g is disconnected and std::invalid_argument when it
/// is empty.
int diameter(const Graph& g);

/// Components ordered by smallest member, each one sorted.
std::vector<VertexSet> connected_components(const Graph& g);

/// Sorts and deduplicates in place so `set` satisfies the VertexSet contract.
void normalize(VertexSet& set);

}  // namespace minorembed
