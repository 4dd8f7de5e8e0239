#include "minorembed/bench.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "minorembed/verifier.hpp"

namespace minorembed {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  return std::string(buf, ptr);
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::complete: return "complete";
    case Family::grid: return "grid";
    case Family::cubic: return "cubic";
  }
  return "unknown";
}

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::global ? "global" : "localized";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "grid") return Family::grid;
  if (name == "cubic") return Family::cubic;
  return std::nullopt;
}

std::optional<SearchMode> parse_mode(std::string_view name) {
  if (name == "global") return SearchMode::global;
  if (name == "localized") return SearchMode::localized;
  return std::nullopt;
}

Graph family_graph(Family family, int size, std::uint64_t seed) {
  switch (family) {
    case Family::complete: return complete_graph(size);
    case Family::grid: return grid_graph(size, size);
    case Family::cubic: return random_cubic_graph(size, seed);
  }
  throw std::invalid_argument("unknown family");
}

void BenchConfig::validate() const {
  if (size_lo < 1 || size_hi < size_lo || size_step < 1) {
    throw std::invalid_argument("size range must satisfy 1 <= lo <= hi with step >= 1");
  }
  if (trials < 1 || instances < 1) throw std::invalid_argument("trials and instances must be >= 1");
  if (modes.empty()) throw std::invalid_argument("at least one mode is required");
  if (family == Family::cubic) {
    for (int n = size_lo; n <= size_hi; n += size_step) {
      if (n < 4 || n % 2 != 0) throw std::invalid_argument("cubic sizes must be even and >= 4");
    }
  }
  params.validate();
}

std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const std::function<void(const BenchRow&)>& on_row) {
  config.validate();
  const auto chimera = chimera_graph(config.g_spec);
  const Graph& g = chimera.graph;
  Embedder embedder(g);

  std::vector<BenchRow> rows;
  for (int size = config.size_lo; size <= config.size_hi; size += config.size_step) {
    std::vector<Graph> instances;
    for (int i = 0; i < config.instances; ++i) {
      const auto instance_seed = derive_seed(config.seed, {static_cast<std::uint64_t>(size),
                                                           static_cast<std::uint64_t>(i)});
      instances.push_back(family_graph(config.family, size, instance_seed));
    }

    for (SearchMode mode : config.modes) {
      BenchRow row;
      row.family = std::string(to_string(config.family));
      row.h_size = size;
      row.g_spec = config.g_spec.describe();
      row.mode = std::string(to_string(mode));

      std::vector<double> times;
      double rounds = 0.0;
      double pops = 0.0;
      for (int i = 0; i < config.instances; ++i) {
        const Graph& h = instances[static_cast<std::size_t>(i)];
        for (int t = 0; t < config.trials; ++t) {
          EmbedParams params = config.params;
          params.localized = mode == SearchMode::localized;
          params.seed = derive_seed(config.seed, {static_cast<std::uint64_t>(size),
                                                  static_cast<std::uint64_t>(i),
                                                  static_cast<std::uint64_t>(t), 0x62656e6368ULL});
          const auto outcome = embedder.run(h, params);
          if (outcome.success()) {
            if (!verify_embedding(g, h, outcome.chains).empty()) {
              throw std::logic_error("embedder reported an invalid embedding");
            }
            ++row.successes;
          }
          ++row.trials;
          times.push_back(outcome.stats.wall_time_s);
          rounds += outcome.stats.rounds;
          pops += static_cast<double>(outcome.stats.pops);
        }
      }
      row.success_rate = static_cast<double>(row.successes) / row.trials;
      row.median_time_s = median(std::move(times));
      row.mean_rounds = rounds / row.trials;
      row.mean_pops = pops / row.trials;
      if (on_row) on_row(row);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool include_timing) {
  out << "family,h_size,g_spec,trials,successes,success_rate,median_time_s,mean_rounds,mean_pops,"
         "mode\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.h_size << ',' << r.g_spec << ',' << r.trials << ',' << r.successes
        << ',' << fixed(r.success_rate, 4) << ','
        << (include_timing ? fixed(r.median_time_s, 3) : std::string("NA")) << ','
        << fixed(r.mean_rounds, 2) << ',' << fixed(r.mean_pops, 1) << ',' << r.mode << '\n';
  }
}

}  // namespace minorembed
