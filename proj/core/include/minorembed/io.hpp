#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorembed/embedder.hpp"
#include "minorembed/graph.hpp"

namespace minorembed {

/// Malformed input text; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Edge-list text:
///
///   p <vertex_count> <edge_count>
///   <u> <v>
///   ...
///
/// 0-indexed, '#' starts a comment, blank lines are ignored. The number of
/// edge lines must equal <edge_count>; duplicates and loops are then
/// normalized as in build_graph.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Canonical form: header then each edge once as "u v" with u < v, sorted.
/// read_edge_list(write_edge_list(g)) == g, and canonical text is
/// reproduced byte for byte.
void write_edge_list(std::ostream& out, const Graph& g);

/// One vertex id per line; '#' comments and blank lines allowed.
VertexSet read_mask(std::istream& in);
VertexSet read_mask_file(const std::string& path);

/// Result document written by `embed` and read by `verify`.
struct EmbeddingFile {
  static constexpr int kFormat = 1;

  EmbedStatus status = EmbedStatus::decomposition;
  std::string g_name;
  std::string h_name;
  std::size_t g_vertices = 0;
  EmbedParams params;
  EmbedStats stats;
  /// False when the file was written without timing, or read from one.
  bool has_timing = true;
  std::vector<VertexSet> chains;
};

/// "key: value" lines headed by "format: 1", then one "chain <x>: ..." line
/// per H vertex. Wall time is printed with 3 decimals, or as "omitted" when
/// include_timing is false so that reruns compare byte for byte.
void write_embedding_file(std::ostream& out, const EmbeddingFile& file, bool include_timing = true);

/// Throws ParseError on an unknown format version, a missing or repeated
/// key, or a chain line out of order.
EmbeddingFile read_embedding_file(std::istream& in);

}  // namespace minorembed
