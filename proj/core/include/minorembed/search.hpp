#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "minorembed/graph.hpp"

namespace minorembed {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Per-vertex weight; the cost of entering a vertex along a path.
using VertexWeights = std::vector<double>;

/// Shortest-path tree grown from a set of sources.
///
/// distance[v] is the sum of the weights of the vertices on a lightest path
/// from the source set to v, counting v and excluding the source vertex the
/// path starts from. Sources sit at 0; unexplored vertices at kInfinity.
struct DistanceTable {
  std::vector<double> distance;
  /// Predecessor on the recorded path, -1 at sources and unexplored vertices.
  std::vector<Vertex> parent;

  bool reached(Vertex v) const { return distance[static_cast<std::size_t>(v)] != kInfinity; }

  /// [v, parent(v), ..., s] ending at the source vertex the path leaves from.
  std::vector<Vertex> path_to_source(Vertex v) const;
};

/// One expansion, recorded when a caller asks for a trace.
struct SearchStep {
  Vertex vertex;
  std::size_t source;
  /// Priority the entry was popped with (distance plus heuristic).
  double key;
  /// Reach cost of `vertex` from `source` at the time of the pop.
  double cost;
};

struct MultisourceResult {
  /// First vertex reached by every source, -1 when none is.
  Vertex winner = -1;
  /// One table per source, restricted to the explored region.
  std::vector<DistanceTable> tables;
  /// Reach cost of the winner from each source (see multisource_astar).
  std::vector<double> winner_cost;
  double max_cost = kInfinity;
  /// Non-stale priority queue pops.
  std::uint64_t pops = 0;

  bool reachable() const { return winner >= 0; }
};

/// Reusable scratch space for the searches below. One workspace must not be
/// shared by concurrent searches; separate workspaces may run in parallel.
class SearchWorkspace {
 public:
  /// Vertex-weighted Dijkstra seeded with every member of `sources` at 0.
  /// Arc (u, v) costs weights[v]. Fills `out` and returns the pop count.
  /// Throws std::invalid_argument for an empty source set.
  std::uint64_t sssp_from_set(const Graph& g, std::span<const double> weights,
                              std::span<const Vertex> sources, DistanceTable& out);

  /// Simultaneous best-first growth from every source set, stopping at the
  /// first vertex reached by all of them. An empty `heuristic` means zero.
  MultisourceResult multisource(const Graph& g, std::span<const double> weights,
                                std::span<const VertexSet> sources,
                                std::span<const double> heuristic,
                                std::vector<SearchStep>* trace = nullptr);

 private:
  struct Entry {
    double key;
    Vertex vertex;
    std::uint32_t source;
    double cost;
  };
  std::vector<std::pair<double, Vertex>> heap_;
  std::vector<Entry> multi_heap_;
  std::vector<double> cost_;
  std::vector<char> reached_;
  std::vector<std::uint32_t> reach_count_;
  std::vector<char> in_source_;
};

DistanceTable weighted_sssp_from_set(const Graph& g, std::span<const double> weights,
                                     std::span<const Vertex> sources);

/// Multisource search with a zero heuristic. The winner minimizes the largest
/// per-source reach cost over all vertices.
MultisourceResult multisource_dijkstra(const Graph& g, std::span<const double> weights,
                                       std::span<const VertexSet> sources,
                                       std::vector<SearchStep>* trace = nullptr);

/// Multisource A*: every (vertex, source) pair carries an estimate
/// cost + heuristic[vertex], and the pair with the globally smallest estimate
/// among unreached pairs is expanded next, ties broken by (vertex, source).
/// The search returns the first vertex reached by all sources.
///
/// Reach costs: a vertex outside source set i costs its table distance; a
/// member of source set i costs its own weight, so settling inside a
/// neighbour's chain is priced as an overlap. Sources are expanded at
/// distance 0 before the first pop.
///
/// Throws std::invalid_argument when `sources` is empty, a source set is
/// empty, or the heuristic is negative or non-finite.
MultisourceResult multisource_astar(const Graph& g, std::span<const double> weights,
                                    std::span<const VertexSet> sources,
                                    std::span<const double> heuristic,
                                    std::vector<SearchStep>* trace = nullptr);

}  // namespace minorembed
