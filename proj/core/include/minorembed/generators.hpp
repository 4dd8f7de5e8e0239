#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minorembed/graph.hpp"

namespace minorembed {

/// Chimera C(M, N, L): an M x N grid of K_{L,L} unit cells.
///
/// Within cell (i, j), shore 0 ("vertical") qubit k connects to vertical
/// qubit k of cells (i +- 1, j), and shore 1 ("horizontal") qubit k connects to
/// horizontal qubit k of cells (i, j +- 1). Unmasked vertex ids are
///   ((i * N + j) * 2 + shore) * L + k.
struct ChimeraSpec {
  int rows = 8;
  int cols = 8;
  int shore = 4;
  VertexSet broken;

  std::size_t full_vertex_count() const {
    return 2 * static_cast<std::size_t>(shore) * static_cast<std::size_t>(rows) *
           static_cast<std::size_t>(cols);
  }
  std::string describe() const;
};

struct ChimeraGraph {
  Graph graph;
  /// Unmasked id -> compacted id, -1 for broken vertices.
  std::vector<Vertex> old_to_new;
  /// Compacted id -> unmasked id.
  std::vector<Vertex> new_to_old;
};

Vertex chimera_index(const ChimeraSpec& spec, int row, int col, int shore, int k);

/// Builds the hardware graph with broken vertices removed and ids compacted.
/// Throws std::invalid_argument for non-positive dimensions or a broken id
/// outside the unmasked id range.
ChimeraGraph chimera_graph(const ChimeraSpec& spec);

Graph complete_graph(int n);
Graph path_graph(int n);
/// rows x cols orthogonal grid, vertex (r, c) has id r * cols + c.
Graph grid_graph(int rows, int cols);

/// 3-regular simple graph from the pairing model, redrawing whole pairings
/// until no loop or parallel edge appears. Deterministic per seed. Throws
/// std::invalid_argument unless n is even and at least 4.
Graph random_cubic_graph(int n, std::uint64_t seed);

}  // namespace minorembed
