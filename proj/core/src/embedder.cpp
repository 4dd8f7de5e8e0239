#include "minorembed/embedder.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "minorembed/verifier.hpp"

namespace minorembed {

void EmbedParams::validate() const {
  if (patience < 1 || max_rounds < 1 || tries < 1) {
    throw std::invalid_argument("patience, max_rounds and tries must be at least 1");
  }
  if (!(sampling_scale > 0.0) || !std::isfinite(sampling_scale)) {
    throw std::invalid_argument("sampling_scale must be a positive finite number");
  }
}

EmbedderState::EmbedderState(std::size_t h_vertices, std::size_t g_vertices, std::uint64_t seed)
    : chains_(h_vertices), occupancy_(g_vertices, 0), previous_root_(h_vertices, -1), rng_(seed) {}

VertexSet EmbedderState::tear_out(Vertex x) {
  VertexSet old = std::move(chains_[static_cast<std::size_t>(x)]);
  chains_[static_cast<std::size_t>(x)].clear();
  for (Vertex v : old) --occupancy_[static_cast<std::size_t>(v)];
  return old;
}

void EmbedderState::assign(Vertex x, VertexSet chain) {
  tear_out(x);
  for (Vertex v : chain) ++occupancy_[static_cast<std::size_t>(v)];
  chains_[static_cast<std::size_t>(x)] = std::move(chain);
}

void EmbedderState::extend(Vertex x, std::span<const Vertex> extra) {
  auto& chain = chains_[static_cast<std::size_t>(x)];
  for (Vertex v : extra) {
    const auto at = std::lower_bound(chain.begin(), chain.end(), v);
    if (at != chain.end() && *at == v) continue;
    chain.insert(at, v);
    ++occupancy_[static_cast<std::size_t>(v)];
  }
}

ImprovementMetric EmbedderState::metric() const {
  ImprovementMetric m;
  for (int occ : occupancy_) m.max_occupancy = std::max(m.max_occupancy, occ);
  for (const auto& chain : chains_) m.total_chain_size += static_cast<std::int64_t>(chain.size());
  return m;
}

bool EmbedderState::all_chains_nonempty() const {
  return std::none_of(chains_.begin(), chains_.end(), [](const VertexSet& c) { return c.empty(); });
}

bool EmbedderState::occupancy_consistent() const {
  std::vector<int> recount(occupancy_.size(), 0);
  for (const auto& chain : chains_) {
    for (Vertex v : chain) ++recount[static_cast<std::size_t>(v)];
  }
  return recount == occupancy_;
}

int weight_base(const Graph& g) {
  int widest = 1;
  for (Vertex s = 0; static_cast<std::size_t>(s) < g.vertex_count(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d != kUnreachable) widest = std::max(widest, d);
    }
  }
  return std::max(widest, 2);
}

WeightTable::WeightTable(int base) : base_(base) {
  if (base < 1) throw std::invalid_argument("weight base must be positive");
  const int cap = base == 1 ? 0 : static_cast<int>(std::floor(500.0 / std::log2(base)));
  powers_.reserve(static_cast<std::size_t>(cap) + 1);
  double p = 1.0;
  for (int k = 0; k <= cap; ++k) {
    powers_.push_back(p);
    p *= base;
  }
}

VertexWeights compute_weights(const EmbedderState& state, Vertex excluded, int base) {
  const WeightTable table(base);
  const auto occupancy = state.occupancy();
  VertexWeights out(occupancy.size());
  for (std::size_t g = 0; g < occupancy.size(); ++g) out[g] = table(occupancy[g]);
  if (excluded >= 0) {
    for (Vertex g : state.chain(excluded)) {
      out[static_cast<std::size_t>(g)] = table(occupancy[static_cast<std::size_t>(g)] - 1);
    }
  }
  return out;
}

std::optional<Vertex> sample_root(std::span<const double> costs, bool root_sampling,
                                  double sampling_scale, Rng& rng) {
  Vertex best = -1;
  for (std::size_t v = 0; v < costs.size(); ++v) {
    if (costs[v] == kInfinity) continue;
    if (best < 0 || costs[v] < costs[static_cast<std::size_t>(best)]) best = static_cast<Vertex>(v);
  }
  if (best < 0) return std::nullopt;
  if (!root_sampling) return best;

  const double floor = costs[static_cast<std::size_t>(best)];
  double total = 0.0;
  for (double c : costs) {
    if (c != kInfinity) total += std::exp(-(c - floor) / sampling_scale);
  }
  double draw = rng.unit() * total;
  Vertex last = best;
  for (std::size_t v = 0; v < costs.size(); ++v) {
    if (costs[v] == kInfinity) continue;
    const double p = std::exp(-(costs[v] - floor) / sampling_scale);
    if (p == 0.0) continue;
    last = static_cast<Vertex>(v);
    draw -= p;
    if (draw < 0.0) return last;
  }
  return last;
}

Embedder::Embedder(const Graph& g) : g_(g), weights_(minorembed::weight_base(g)) {
  if (g.vertex_count() == 0) throw std::invalid_argument("cannot embed into an empty graph");
  path_count_.assign(g.vertex_count(), 0);
  hop_cache_.resize(g.vertex_count());
}

std::span<const double> Embedder::hop_heuristic(Vertex target) {
  auto& cached = hop_cache_[static_cast<std::size_t>(target)];
  if (cached.empty()) {
    const auto hops = bfs_distances(g_, target);
    const auto far = static_cast<double>(g_.vertex_count());
    cached.resize(hops.size());
    for (std::size_t v = 0; v < hops.size(); ++v) {
      cached[v] = hops[v] == kUnreachable ? far : static_cast<double>(hops[v]);
    }
  }
  return cached;
}

std::optional<VertexModel> Embedder::find_minimal_vertex_model(
    std::span<const double> weights, std::span<const VertexSet> neighbor_chains,
    const ModelSearchOptions& options, Rng& rng, Vertex previous_root) {
  const auto n = g_.vertex_count();
  VertexModel model;
  model.neighbor_additions.resize(neighbor_chains.size());

  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < neighbor_chains.size(); ++j) {
    if (!neighbor_chains[j].empty()) live.push_back(j);
  }
  if (live.empty()) {
    model.root = static_cast<Vertex>(rng.below(n));
    model.chain = {model.root};
    return model;
  }

  // One shortest-path table per non-empty neighbour, indexed like `live`.
  std::span<const DistanceTable> tables;
  MultisourceResult multi;
  if (options.localized) {
    std::vector<VertexSet> sources;
    sources.reserve(live.size());
    for (std::size_t j : live) sources.push_back(neighbor_chains[j]);
    const auto heuristic =
        previous_root >= 0 ? hop_heuristic(previous_root) : std::span<const double>{};
    multi = workspace_.multisource(g_, weights, sources, heuristic);
    model.pops = multi.pops;
    if (!multi.reachable()) return std::nullopt;
    model.root = multi.winner;
    tables = multi.tables;
  } else {
    if (tables_.size() < live.size()) tables_.resize(live.size());
    costs_.assign(n, 0.0);
    for (std::size_t t = 0; t < live.size(); ++t) {
      const auto& chain = neighbor_chains[live[t]];
      model.pops += workspace_.sssp_from_set(g_, weights, chain, tables_[t]);
      const auto& dist = tables_[t].distance;
      for (std::size_t v = 0; v < n; ++v) costs_[v] += dist[v];
      // A vertex already in this neighbour's chain costs its own weight.
      for (Vertex v : chain) costs_[static_cast<std::size_t>(v)] += weights[static_cast<std::size_t>(v)];
    }
    const auto root = sample_root(costs_, options.root_sampling, options.sampling_scale, rng);
    if (!root) return std::nullopt;
    model.root = *root;
    tables = std::span<const DistanceTable>(tables_.data(), live.size());
  }

  // Interior of each path: vertices strictly between the root and the
  // neighbour chain, ordered from the root outwards.
  std::vector<std::vector<Vertex>> interiors(live.size());
  std::vector<Vertex> touched;
  for (std::size_t t = 0; t < live.size(); ++t) {
    const auto& table = tables[t];
    auto& interior = interiors[t];
    for (Vertex v = table.parent[static_cast<std::size_t>(model.root)];
         v >= 0 && table.parent[static_cast<std::size_t>(v)] >= 0;
         v = table.parent[static_cast<std::size_t>(v)]) {
      interior.push_back(v);
    }
    for (Vertex v : interior) {
      if (path_count_[static_cast<std::size_t>(v)]++ == 0) touched.push_back(v);
    }
  }

  model.chain.push_back(model.root);
  for (std::size_t t = 0; t < live.size(); ++t) {
    const auto& interior = interiors[t];
    auto& handed = model.neighbor_additions[live[t]];
    std::size_t split = interior.size();
    while (split > 0 && path_count_[static_cast<std::size_t>(interior[split - 1])] == 1) {
      --split;
      handed.push_back(interior[split]);
    }
    model.chain.insert(model.chain.end(), interior.begin(), interior.begin() + static_cast<std::ptrdiff_t>(split));
    normalize(handed);

    // A root inside a singleton neighbour chain has no edge to it; borrow the
    // lightest neighbouring vertex so the two chains touch.
    const auto& chain = neighbor_chains[live[t]];
    if (chain.size() == 1 && chain.front() == model.root) {
      Vertex pick = -1;
      for (Vertex u : g_.neighbors(model.root)) {
        if (pick < 0 || weights[static_cast<std::size_t>(u)] < weights[static_cast<std::size_t>(pick)]) pick = u;
      }
      if (pick >= 0) model.chain.push_back(pick);
    }
  }
  for (Vertex v : touched) path_count_[static_cast<std::size_t>(v)] = 0;
  normalize(model.chain);
  return model;
}

Embedder::RestartResult Embedder::restart(const Graph& h, const EmbedParams& params,
                                          std::uint64_t seed) {
  const auto nh = h.vertex_count();
  EmbedderState state(nh, g_.vertex_count(), seed);
  const ModelSearchOptions options{params.localized, params.root_sampling, params.sampling_scale};

  std::vector<Vertex> order(nh);
  std::iota(order.begin(), order.end(), 0);
  if (params.randomize_order) state.rng().shuffle(order);

  RestartResult result;
  bool have_best = false;
  int stalled = 0;
  std::vector<VertexSet> neighbor_chains;
  VertexWeights weights(g_.vertex_count());

  for (int round = 1; round <= params.max_rounds; ++round) {
    result.rounds = round;
    for (Vertex x : order) {
      VertexSet old = state.tear_out(x);
      const auto occupancy = state.occupancy();
      for (std::size_t v = 0; v < weights.size(); ++v) weights[v] = weights_(occupancy[v]);

      const auto adj = h.neighbors(x);
      neighbor_chains.resize(adj.size());
      for (std::size_t j = 0; j < adj.size(); ++j) neighbor_chains[j] = state.chain(adj[j]);

      auto model = find_minimal_vertex_model(weights, neighbor_chains, options, state.rng(),
                                             state.previous_root(x));
      if (!model) {
        state.assign(x, std::move(old));
        continue;
      }
      result.pops += model->pops;
      state.assign(x, std::move(model->chain));
      for (std::size_t j = 0; j < adj.size(); ++j) {
        state.extend(adj[j], model->neighbor_additions[j]);
      }
      state.set_previous_root(x, model->root);
    }

    const auto metric = state.metric();
    if (!have_best || metric < result.metric) {
      have_best = true;
      result.metric = metric;
      result.chains = state.chains();
      stalled = 0;
    } else {
      ++stalled;
    }

    if (metric.max_occupancy <= 1 && state.all_chains_nonempty() &&
        verify_embedding(g_, h, state.chains()).empty()) {
      result.success = true;
      result.metric = metric;
      result.chains = state.chains();
      break;
    }
    if (round >= 2 && stalled >= params.patience) break;
  }
  return result;
}

EmbedOutcome Embedder::run(const Graph& h, const EmbedParams& params) {
  params.validate();
  if (h.vertex_count() == 0) throw std::invalid_argument("H must have at least one vertex");
  const auto start = std::chrono::steady_clock::now();

  EmbedOutcome outcome;
  outcome.chains.assign(h.vertex_count(), VertexSet{});
  if (h.vertex_count() > g_.vertex_count()) return outcome;

  bool have_best = false;
  for (int t = 0; t < params.tries; ++t) {
    auto attempt = restart(h, params, derive_seed(params.seed, {static_cast<std::uint64_t>(t)}));
    outcome.stats.rounds += attempt.rounds;
    outcome.stats.pops += attempt.pops;
    outcome.stats.tries_run = t + 1;
    if (attempt.success) {
      outcome.status = EmbedStatus::embedding;
      outcome.chains = std::move(attempt.chains);
      outcome.stats.metric = attempt.metric;
      break;
    }
    if (!have_best || attempt.metric < outcome.stats.metric) {
      have_best = true;
      outcome.chains = std::move(attempt.chains);
      outcome.stats.metric = attempt.metric;
    }
  }
  outcome.stats.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

EmbedOutcome find_embedding(const Graph& g, const Graph& h, const EmbedParams& params) {
  Embedder embedder(g);
  return embedder.run(h, params);
}

std::optional<VertexModel> find_minimal_vertex_model(const Graph& g,
                                                     std::span<const double> weights,
                                                     std::span<const VertexSet> neighbor_chains,
                                                     const ModelSearchOptions& options, Rng& rng,
                                                     Vertex previous_root) {
  Embedder embedder(g);
  return embedder.find_minimal_vertex_model(weights, neighbor_chains, options, rng, previous_root);
}

}  // namespace minorembed
