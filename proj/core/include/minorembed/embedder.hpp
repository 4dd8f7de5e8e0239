#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minorembed/graph.hpp"
#include "minorembed/rng.hpp"
#include "minorembed/search.hpp"

namespace minorembed {

struct EmbedParams {
  std::uint64_t seed = 1;
  /// Consecutive non-improving sweeps tolerated before a restart gives up.
  int patience = 10;
  int max_rounds = 1000;
  /// Independent restarts; the first success wins.
  int tries = 10;
  /// Root selection by multisource A* instead of one Dijkstra per neighbour.
  bool localized = false;
  bool randomize_order = true;
  /// Draw the root with probability proportional to
  /// exp(-(cost - min_cost) / sampling_scale) instead of taking the argmin.
  bool root_sampling = true;
  double sampling_scale = 1.0;

  /// Throws std::invalid_argument when a count is below 1 or the scale is
  /// not a positive finite number.
  void validate() const;
};

/// Compared lexicographically: the worst overlap first, then total size.
struct ImprovementMetric {
  int max_occupancy = 0;
  std::int64_t total_chain_size = 0;

  auto operator<=>(const ImprovementMetric&) const = default;
};

enum class EmbedStatus {
  /// Chains are disjoint: a verified minor embedding.
  embedding,
  /// Chains are connected and cover every edge of H but may overlap.
  decomposition,
};

struct EmbedStats {
  /// Sweeps summed over every restart that ran.
  int rounds = 0;
  int tries_run = 0;
  ImprovementMetric metric;
  double wall_time_s = 0.0;
  /// Priority queue pops summed over all searches; a machine-neutral work count.
  std::uint64_t pops = 0;
};

struct EmbedOutcome {
  EmbedStatus status = EmbedStatus::decomposition;
  /// One chain per H vertex.
  std::vector<VertexSet> chains;
  EmbedStats stats;

  bool success() const { return status == EmbedStatus::embedding; }
};

/// Chains plus per-G-vertex occupancy counts, kept consistent incrementally.
class EmbedderState {
 public:
  EmbedderState(std::size_t h_vertices, std::size_t g_vertices, std::uint64_t seed);

  const std::vector<VertexSet>& chains() const { return chains_; }
  const VertexSet& chain(Vertex x) const { return chains_[static_cast<std::size_t>(x)]; }
  std::span<const int> occupancy() const { return occupancy_; }
  Vertex previous_root(Vertex x) const { return previous_root_[static_cast<std::size_t>(x)]; }
  void set_previous_root(Vertex x, Vertex g) { previous_root_[static_cast<std::size_t>(x)] = g; }
  Rng& rng() { return rng_; }

  /// Removes and returns the chain of x.
  VertexSet tear_out(Vertex x);
  /// Replaces the chain of x; `chain` must be normalized.
  void assign(Vertex x, VertexSet chain);
  /// Adds vertices to the chain of x, ignoring ones already present.
  void extend(Vertex x, std::span<const Vertex> extra);

  ImprovementMetric metric() const;
  bool all_chains_nonempty() const;
  /// Recounts occupancy from the chains and compares with the running counts.
  bool occupancy_consistent() const;

 private:
  std::vector<VertexSet> chains_;
  std::vector<int> occupancy_;
  std::vector<Vertex> previous_root_;
  Rng rng_;
};

/// Base of the exponential vertex weight: the diameter of G, or of its
/// widest component when G is disconnected, and never below 2.
int weight_base(const Graph& g);

/// base^k, with k capped once the power would pass 2^500. Order between
/// different occupancy levels is preserved up to the cap.
class WeightTable {
 public:
  explicit WeightTable(int base);
  int base() const { return base_; }
  int max_exponent() const { return static_cast<int>(powers_.size()) - 1; }
  double operator()(int occupancy) const {
    return powers_[static_cast<std::size_t>(std::min(occupancy, max_exponent()))];
  }

 private:
  int base_;
  std::vector<double> powers_;
};

/// weight(g) = base^(number of chains other than `excluded`'s containing g).
VertexWeights compute_weights(const EmbedderState& state, Vertex excluded, int base);

/// Picks a root from per-vertex costs; nullopt when every cost is infinite.
/// Without sampling the (cost, id) minimum wins.
std::optional<Vertex> sample_root(std::span<const double> costs, bool root_sampling,
                                  double sampling_scale, Rng& rng);

struct ModelSearchOptions {
  bool localized = false;
  bool root_sampling = true;
  double sampling_scale = 1.0;
};

/// A replacement chain for one H vertex plus the path vertices handed to
/// its neighbours' chains.
struct VertexModel {
  Vertex root = -1;
  VertexSet chain;
  /// Parallel to the neighbour chains passed in; empty for empty neighbours.
  std::vector<VertexSet> neighbor_additions;
  std::uint64_t pops = 0;
};

/// Embeds graphs H into one fixed graph G. Caches the weight base and the
/// hop-distance heuristic tables of G between runs, so one instance must not
/// be used from several threads at once. G must outlive the embedder.
class Embedder {
 public:
  explicit Embedder(const Graph& g);

  const Graph& graph() const { return g_; }
  int weight_base() const { return weights_.base(); }

  /// Chooses a root and grows shortest paths from it to every non-empty
  /// neighbour chain. Path vertices lying on exactly one path, counted back
  /// from that path's neighbour chain, join the neighbour's chain; the root
  /// and everything between it and the last shared vertex form the new
  /// chain. Returns nullopt when no vertex reaches every neighbour chain.
  std::optional<VertexModel> find_minimal_vertex_model(std::span<const double> weights,
                                                       std::span<const VertexSet> neighbor_chains,
                                                       const ModelSearchOptions& options, Rng& rng,
                                                       Vertex previous_root = -1);

  /// Restarts the sweep-and-reinsert loop up to params.tries times and
  /// returns the first verified embedding, or else the best decomposition
  /// seen. Throws std::invalid_argument for an empty H or invalid params.
  EmbedOutcome run(const Graph& h, const EmbedParams& params);

  /// Hop distance from every vertex to `target`, as doubles for the A*
  /// heuristic. Vertices in other components get vertex_count().
  std::span<const double> hop_heuristic(Vertex target);

 private:
  struct RestartResult {
    bool success = false;
    std::vector<VertexSet> chains;
    ImprovementMetric metric;
    int rounds = 0;
    std::uint64_t pops = 0;
  };

  RestartResult restart(const Graph& h, const EmbedParams& params, std::uint64_t seed);

  const Graph& g_;
  WeightTable weights_;
  SearchWorkspace workspace_;
  std::vector<DistanceTable> tables_;
  std::vector<double> costs_;
  std::vector<int> path_count_;
  std::vector<std::vector<double>> hop_cache_;
};

/// Convenience wrapper constructing a one-shot Embedder.
EmbedOutcome find_embedding(const Graph& g, const Graph& h, const EmbedParams& params);

/// Stateless wrapper around Embedder::find_minimal_vertex_model.
std::optional<VertexModel> find_minimal_vertex_model(const Graph& g,
                                                     std::span<const double> weights,
                                                     std::span<const VertexSet> neighbor_chains,
                                                     const ModelSearchOptions& options, Rng& rng,
                                                     Vertex previous_root = -1);

}  // namespace minorembed
