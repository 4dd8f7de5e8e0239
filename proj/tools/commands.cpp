#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "minorembed/bench.hpp"
#include "minorembed/embedder.hpp"
#include "minorembed/generators.hpp"
#include "minorembed/io.hpp"
#include "minorembed/verifier.hpp"

namespace minorembed::cli {

namespace {

// Where G comes from: an edge-list file or a (possibly masked) Chimera graph.
struct GraphSource {
  std::string file;
  std::vector<int> chimera;
  std::string mask;

  void add_to(CLI::App& app) {
    auto* chimera_opt = app.add_option("--chimera", chimera, "Chimera dimensions M N L")
                            ->expected(3);
    app.add_option("--mask", mask, "File of broken Chimera vertex ids")->needs(chimera_opt);
  }

  Graph load(std::string& name) const {
    if (!chimera.empty()) {
      ChimeraSpec spec{chimera[0], chimera[1], chimera[2], {}};
      if (!mask.empty()) spec.broken = read_mask_file(mask);
      name = spec.describe();
      return chimera_graph(spec).graph;
    }
    if (file.empty()) throw std::invalid_argument("give a G edge-list file or --chimera M N L");
    name = file;
    return read_edge_list_file(file);
  }
};

struct RunFlags {
  EmbedParams params;
  bool no_root_sampling = false;
  bool fixed_order = false;

  void add_to(CLI::App& app) {
    app.add_option("--seed", params.seed, "Random seed")->capture_default_str();
    app.add_option("--tries", params.tries, "Independent restarts")->capture_default_str();
    app.add_option("--patience", params.patience, "Non-improving sweeps before a restart stops")
        ->capture_default_str();
    app.add_option("--max-rounds", params.max_rounds, "Sweep limit per restart")
        ->capture_default_str();
    app.add_option("--sampling-scale", params.sampling_scale, "Temperature of root sampling")
        ->capture_default_str();
    app.add_flag("--localized", params.localized, "Root selection by multisource A*");
    app.add_flag("--no-root-sampling", no_root_sampling, "Always take the cheapest root");
    app.add_flag("--fixed-order", fixed_order, "Sweep H vertices in id order");
  }

  EmbedParams resolved() const {
    EmbedParams p = params;
    p.root_sampling = !no_root_sampling;
    p.randomize_order = !fixed_order;
    return p;
  }
};

// Output sink honouring --out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct EmbedCommand {
  std::string h_file;
  GraphSource g;
  RunFlags flags;
  std::string out_file;
  bool no_timing = false;

  int operator()(std::ostream& out, std::ostream& err) const {
    std::string g_name;
    const Graph g_graph = g.load(g_name);
    const Graph h_graph = read_edge_list_file(h_file);
    if (h_graph.vertex_count() == 0) throw std::invalid_argument("H has no vertices");
    if (h_graph.vertex_count() > g_graph.vertex_count()) {
      throw std::invalid_argument("H has more vertices than G");
    }
    const EmbedParams params = flags.resolved();
    const auto outcome = find_embedding(g_graph, h_graph, params);

    EmbeddingFile file;
    file.status = outcome.status;
    file.g_name = g_name;
    file.h_name = h_file;
    file.g_vertices = g_graph.vertex_count();
    file.params = params;
    file.stats = outcome.stats;
    file.chains = outcome.chains;
    if (outcome.success()) {
      const auto violations = verify_embedding(g_graph, h_graph, outcome.chains);
      if (!violations.empty()) {
        err << "internal error: embedding failed verification: " << violations.front().describe()
            << '\n';
        return kNotFound;
      }
    }

    Sink sink(out_file, out);
    write_embedding_file(sink.get(), file, !no_timing);
    err << (outcome.success() ? "embedding found" : "no embedding found") << " after "
        << outcome.stats.rounds << " rounds, " << outcome.stats.tries_run
        << " tries (max occupancy " << outcome.stats.metric.max_occupancy << ", total size "
        << outcome.stats.metric.total_chain_size << ")\n";
    return outcome.success() ? kOk : kNotFound;
  }
};

struct VerifyCommand {
  std::string h_file;
  std::string embedding_file;
  GraphSource g;
  bool decomposition = false;

  int operator()(std::ostream& out, std::ostream& err) const {
    std::string g_name;
    const Graph g_graph = g.load(g_name);
    const Graph h_graph = read_edge_list_file(h_file);
    std::ifstream in(embedding_file);
    if (!in) throw std::runtime_error("cannot open " + embedding_file);
    const auto file = read_embedding_file(in);
    if (file.g_vertices != g_graph.vertex_count()) {
      throw std::invalid_argument("embedding was made for a G with " +
                                  std::to_string(file.g_vertices) + " vertices");
    }
    const auto violations = decomposition ? verify_decomposition(g_graph, h_graph, file.chains)
                                          : verify_embedding(g_graph, h_graph, file.chains);
    for (const auto& v : violations) out << v.describe() << '\n';
    if (violations.empty()) {
      err << "valid " << (decomposition ? "decomposition" : "embedding") << '\n';
      return kOk;
    }
    return kNotFound;
  }
};

struct GenerateCommand {
  std::string kind;
  std::vector<int> dims;
  std::uint64_t seed = 1;
  std::string mask;
  std::string out_file;

  int operator()(std::ostream& out, std::ostream&) const {
    const auto need = [&](std::size_t count) {
      if (dims.size() != count) {
        throw std::invalid_argument(kind + " takes " + std::to_string(count) + " size argument(s)");
      }
    };
    Graph g;
    if (kind == "chimera") {
      need(3);
      ChimeraSpec spec{dims[0], dims[1], dims[2], {}};
      if (!mask.empty()) spec.broken = read_mask_file(mask);
      g = chimera_graph(spec).graph;
    } else if (kind == "complete") {
      need(1);
      g = complete_graph(dims[0]);
    } else if (kind == "path") {
      need(1);
      g = path_graph(dims[0]);
    } else if (kind == "grid") {
      need(2);
      g = grid_graph(dims[0], dims[1]);
    } else if (kind == "cubic") {
      need(1);
      g = random_cubic_graph(dims[0], seed);
    } else {
      throw std::invalid_argument("unknown graph kind '" + kind + "'");
    }
    Sink sink(out_file, out);
    write_edge_list(sink.get(), g);
    return kOk;
  }
};

struct BenchCommand {
  std::string family = "complete";
  std::vector<int> sizes;
  int step = 1;
  std::vector<int> chimera{8, 8, 4};
  std::string mask;
  int trials = 100;
  int instances = 1;
  std::string mode = "global";
  RunFlags flags;
  std::string out_file;
  bool no_timing = false;
  bool progress = false;

  int operator()(std::ostream& out, std::ostream& err) const {
    BenchConfig config;
    const auto fam = parse_family(family);
    if (!fam) throw std::invalid_argument("unknown family '" + family + "'");
    config.family = *fam;
    if (sizes.empty() || sizes.size() > 2) throw std::invalid_argument("--sizes takes LO [HI]");
    config.size_lo = sizes.front();
    config.size_hi = sizes.back();
    config.size_step = step;
    config.g_spec = ChimeraSpec{chimera[0], chimera[1], chimera[2], {}};
    if (!mask.empty()) config.g_spec.broken = read_mask_file(mask);
    config.trials = trials;
    config.instances = instances;
    if (mode == "both") {
      config.modes = {SearchMode::global, SearchMode::localized};
    } else if (const auto m = parse_mode(mode)) {
      config.modes = {*m};
    } else {
      throw std::invalid_argument("unknown mode '" + mode + "'");
    }
    config.params = flags.resolved();
    config.seed = config.params.seed;

    const auto rows = run_bench(config, [&](const BenchRow& row) {
      if (progress) {
        err << row.family << ' ' << row.h_size << ' ' << row.mode << ": " << row.successes << '/'
            << row.trials << '\n';
      }
    });
    Sink sink(out_file, out);
    write_bench_csv(sink.get(), rows, !no_timing);
    return kOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heuristic graph minor embedding into Chimera and other hardware graphs",
               "minorembed"};
  app.require_subcommand(1);

  EmbedCommand embed;
  auto* embed_cmd = app.add_subcommand("embed", "Find H as a minor of G");
  embed_cmd->add_option("h_file", embed.h_file, "H edge-list file")->required();
  embed_cmd->add_option("g_file", embed.g.file, "G edge-list file");
  embed.g.add_to(*embed_cmd);
  embed.flags.add_to(*embed_cmd);
  embed_cmd->add_option("--out", embed.out_file, "Write the embedding file here");
  embed_cmd->add_flag("--no-timing", embed.no_timing, "Omit wall time for reproducible output");

  VerifyCommand verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an embedding file against G and H");
  verify_cmd->add_option("h_file", verify.h_file, "H edge-list file")->required();
  verify_cmd->add_option("embedding", verify.embedding_file, "Embedding file")->required();
  verify_cmd->add_option("g_file", verify.g.file, "G edge-list file");
  verify.g.add_to(*verify_cmd);
  verify_cmd->add_flag("--decomposition", verify.decomposition,
                       "Allow overlapping chains (G-decomposition check)");

  GenerateCommand generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate_cmd->add_option("kind", generate.kind, "chimera | complete | path | grid | cubic")
      ->required();
  generate_cmd->add_option("dims", generate.dims, "Size arguments")->required();
  generate_cmd->add_option("--seed", generate.seed, "Seed for cubic graphs");
  generate_cmd->add_option("--mask", generate.mask, "Broken vertex ids for chimera");
  generate_cmd->add_option("--out", generate.out_file, "Output file");

  BenchCommand bench;
  auto* bench_cmd = app.add_subcommand("bench", "Success rate and run time table as CSV");
  bench_cmd->add_option("--family", bench.family, "complete | grid | cubic")->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "Size range LO [HI]")->required()->expected(1, 2);
  bench_cmd->add_option("--step", bench.step, "Size step")->capture_default_str();
  bench_cmd->add_option("--chimera", bench.chimera, "Chimera dimensions M N L")
      ->expected(3)
      ->capture_default_str();
  bench_cmd->add_option("--mask", bench.mask, "File of broken Chimera vertex ids");
  bench_cmd->add_option("--trials", bench.trials, "Runs per H instance")->capture_default_str();
  bench_cmd->add_option("--instances", bench.instances, "H instances per size (cubic)")
      ->capture_default_str();
  bench_cmd->add_option("--mode", bench.mode, "global | localized | both")->capture_default_str();
  bench.flags.add_to(*bench_cmd);
  bench_cmd->add_option("--out", bench.out_file, "Write the CSV here");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Print NA for times");
  bench_cmd->add_flag("--progress", bench.progress, "Report each row on stderr");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (embed_cmd->parsed()) return embed(out, err);
    if (verify_cmd->parsed()) return verify(out, err);
    if (generate_cmd->parsed()) return generate(out, err);
    if (bench_cmd->parsed()) return bench(out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace minorembed::cli
