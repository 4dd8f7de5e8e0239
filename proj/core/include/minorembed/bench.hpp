#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minorembed/embedder.hpp"
#include "minorembed/generators.hpp"

namespace minorembed {

enum class Family { complete, grid, cubic };
enum class SearchMode { global, localized };

std::string_view to_string(Family family);
std::string_view to_string(SearchMode mode);
std::optional<Family> parse_family(std::string_view name);
std::optional<SearchMode> parse_mode(std::string_view name);

/// The H graph of a family at one size: K_n, an n x n grid, or a random
/// cubic graph on n vertices drawn from `seed`.
Graph family_graph(Family family, int size, std::uint64_t seed);

struct BenchConfig {
  Family family = Family::complete;
  int size_lo = 4;
  int size_hi = 4;
  int size_step = 1;
  ChimeraSpec g_spec;
  /// Embedding runs per H instance.
  int trials = 100;
  /// Distinct H graphs per size; only random families use more than one.
  int instances = 1;
  std::vector<SearchMode> modes{SearchMode::global};
  std::uint64_t seed = 1;
  /// Per-run parameters; seed and localized are overridden per cell.
  EmbedParams params;

  /// Throws std::invalid_argument for an empty or malformed size range,
  /// non-positive counts, or odd cubic sizes.
  void validate() const;
};

struct BenchRow {
  std::string family;
  int h_size = 0;
  std::string g_spec;
  /// instances x trials.
  int trials = 0;
  int successes = 0;
  double success_rate = 0.0;
  double median_time_s = 0.0;
  double mean_rounds = 0.0;
  double mean_pops = 0.0;
  std::string mode;
};

/// One row per (size, mode), sizes ascending, modes in config order. Both
/// modes see the same H instances and per-run seeds. Every success is
/// re-verified; a failed check throws std::logic_error.
std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const std::function<void(const BenchRow&)>& on_row = {});

/// Header line plus one line per row. With include_timing false the time
/// column reads NA, which makes the output reproducible byte for byte.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows,
                     bool include_timing = true);

}  // namespace minorembed
