#include "minorembed/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

namespace minorembed {

namespace {

std::string_view strip(std::string_view s) {
  if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    const auto end = std::min(s.find_first_of(" \t", start), s.size());
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

template <class T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

bool parse_bool(std::string_view token, std::size_t line) {
  if (token == "true") return true;
  if (token == "false") return false;
  throw ParseError(line, "expected true or false, got '" + std::string(token) + "'");
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  return std::string(buf, ptr);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

const char* status_name(EmbedStatus status) {
  return status == EmbedStatus::embedding ? "embedding" : "decomposition";
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::int64_t vertex_count = 0;
  std::size_t declared = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = strip(raw);
    if (text.empty()) continue;
    const auto tokens = split(text);
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "p") {
        throw ParseError(line, "expected header 'p <vertex_count> <edge_count>'");
      }
      vertex_count = parse_number<std::int64_t>(tokens[1], line, "vertex count");
      declared = parse_number<std::size_t>(tokens[2], line, "edge count");
      if (vertex_count < 0) throw ParseError(line, "negative vertex count");
      have_header = true;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line, "expected an edge 'u v'");
    const auto u = parse_number<Vertex>(tokens[0], line, "vertex id");
    const auto v = parse_number<Vertex>(tokens[1], line, "vertex id");
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw ParseError(line, "edge endpoint out of range");
    }
    edges.emplace_back(u, v);
  }
  if (!have_header) throw ParseError(0, "missing 'p' header");
  if (edges.size() != declared) {
    throw ParseError(0, "header declares " + std::to_string(declared) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return build_graph(vertex_count, edges);
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

VertexSet read_mask(std::istream& in) {
  VertexSet mask;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = strip(raw);
    if (text.empty()) continue;
    const auto v = parse_number<Vertex>(text, line, "vertex id");
    if (v < 0) throw ParseError(line, "negative vertex id");
    mask.push_back(v);
  }
  normalize(mask);
  return mask;
}

VertexSet read_mask_file(const std::string& path) {
  auto in = open_input(path);
  return read_mask(in);
}

void write_embedding_file(std::ostream& out, const EmbeddingFile& file, bool include_timing) {
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  const auto& p = file.params;
  const auto& s = file.stats;
  out << "format: " << EmbeddingFile::kFormat << '\n'
      << "status: " << status_name(file.status) << '\n'
      << "g: " << file.g_name << '\n'
      << "h: " << file.h_name << '\n'
      << "g_vertices: " << file.g_vertices << '\n'
      << "h_vertices: " << file.chains.size() << '\n'
      << "seed: " << p.seed << '\n'
      << "tries: " << p.tries << '\n'
      << "patience: " << p.patience << '\n'
      << "max_rounds: " << p.max_rounds << '\n'
      << "localized: " << flag(p.localized) << '\n'
      << "randomize_order: " << flag(p.randomize_order) << '\n'
      << "root_sampling: " << flag(p.root_sampling) << '\n'
      << "sampling_scale: " << format_double(p.sampling_scale) << '\n'
      << "rounds: " << s.rounds << '\n'
      << "tries_run: " << s.tries_run << '\n'
      << "max_occupancy: " << s.metric.max_occupancy << '\n'
      << "total_chain_size: " << s.metric.total_chain_size << '\n'
      << "pops: " << s.pops << '\n'
      << "wall_time_s: "
      << (include_timing && file.has_timing ? format_fixed(s.wall_time_s, 3) : "omitted") << '\n';
  for (std::size_t x = 0; x < file.chains.size(); ++x) {
    out << "chain " << x << ':';
    for (Vertex v : file.chains[x]) out << ' ' << v;
    out << '\n';
  }
}

EmbeddingFile read_embedding_file(std::istream& in) {
  std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> fields;
  std::vector<std::string> chain_lines;
  std::vector<std::size_t> chain_line_numbers;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) continue;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, "expected 'key: value'");
    const auto key = text.substr(0, colon);
    auto value = text.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.remove_prefix(1);

    if (key.starts_with("chain ")) {
      const auto index = parse_number<std::size_t>(key.substr(6), line, "chain index");
      if (index != chain_lines.size()) throw ParseError(line, "chain lines out of order");
      chain_lines.emplace_back(value);
      chain_line_numbers.push_back(line);
      continue;
    }
    if (!chain_lines.empty()) throw ParseError(line, "header key after chain lines");
    if (!fields.emplace(std::string(key), std::pair{std::string(value), line}).second) {
      throw ParseError(line, "repeated key '" + std::string(key) + "'");
    }
  }

  const auto take = [&](std::string_view key) -> std::pair<std::string, std::size_t> {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(0, "missing key '" + std::string(key) + "'");
    auto found = it->second;
    fields.erase(it);
    return found;
  };
  const auto number = [&]<class T>(std::string_view key, T) {
    const auto [value, at] = take(key);
    return parse_number<T>(value, at, std::string(key).c_str());
  };
  const auto boolean = [&](std::string_view key) {
    const auto [value, at] = take(key);
    return parse_bool(value, at);
  };

  EmbeddingFile file;
  if (const auto version = number("format", int{}); version != EmbeddingFile::kFormat) {
    throw ParseError(0, "unsupported format version " + std::to_string(version));
  }
  {
    const auto [value, at] = take("status");
    if (value == "embedding") {
      file.status = EmbedStatus::embedding;
    } else if (value == "decomposition") {
      file.status = EmbedStatus::decomposition;
    } else {
      throw ParseError(at, "unknown status '" + value + "'");
    }
  }
  file.g_name = take("g").first;
  file.h_name = take("h").first;
  file.g_vertices = number("g_vertices", std::size_t{});
  const auto h_vertices = number("h_vertices", std::size_t{});
  file.params.seed = number("seed", std::uint64_t{});
  file.params.tries = number("tries", int{});
  file.params.patience = number("patience", int{});
  file.params.max_rounds = number("max_rounds", int{});
  file.params.localized = boolean("localized");
  file.params.randomize_order = boolean("randomize_order");
  file.params.root_sampling = boolean("root_sampling");
  file.params.sampling_scale = number("sampling_scale", double{});
  file.stats.rounds = number("rounds", int{});
  file.stats.tries_run = number("tries_run", int{});
  file.stats.metric.max_occupancy = number("max_occupancy", int{});
  file.stats.metric.total_chain_size = number("total_chain_size", std::int64_t{});
  file.stats.pops = number("pops", std::uint64_t{});
  {
    const auto [value, at] = take("wall_time_s");
    file.has_timing = value != "omitted";
    if (file.has_timing) file.stats.wall_time_s = parse_number<double>(value, at, "wall time");
  }
  if (!fields.empty()) {
    const auto& [key, entry] = *fields.begin();
    throw ParseError(entry.second, "unknown key '" + key + "'");
  }

  if (chain_lines.size() != h_vertices) {
    throw ParseError(0, "expected " + std::to_string(h_vertices) + " chain lines, found " +
                            std::to_string(chain_lines.size()));
  }
  for (std::size_t x = 0; x < chain_lines.size(); ++x) {
    VertexSet chain;
    for (const auto token : split(chain_lines[x])) {
      const auto v = parse_number<Vertex>(token, chain_line_numbers[x], "vertex id");
      if (v < 0 || static_cast<std::size_t>(v) >= file.g_vertices) {
        throw ParseError(chain_line_numbers[x], "chain vertex outside G");
      }
      chain.push_back(v);
    }
    normalize(chain);
    file.chains.push_back(std::move(chain));
  }
  file.params.validate();
  return file;
}

}  // namespace minorembed
