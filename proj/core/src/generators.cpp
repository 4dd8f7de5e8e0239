#include "minorembed/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "minorembed/rng.hpp"

namespace minorembed {

std::string ChimeraSpec::describe() const {
  std::string out = "C" + std::to_string(rows) + "x" + std::to_string(cols) + "x" +
                    std::to_string(shore);
  if (!broken.empty()) out += "-" + std::to_string(broken.size()) + "broken";
  return out;
}

Vertex chimera_index(const ChimeraSpec& spec, int row, int col, int shore, int k) {
  return ((row * spec.cols + col) * 2 + shore) * spec.shore + k;
}

ChimeraGraph chimera_graph(const ChimeraSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1 || spec.shore < 1) {
    throw std::invalid_argument("chimera dimensions must be positive");
  }
  const auto full = spec.full_vertex_count();
  if (full > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
    throw std::invalid_argument("chimera graph too large");
  }

  ChimeraGraph out;
  out.old_to_new.assign(full, 0);
  for (Vertex b : spec.broken) {
    if (b < 0 || static_cast<std::size_t>(b) >= full) {
      throw std::invalid_argument("broken vertex " + std::to_string(b) + " outside " +
                                  spec.describe());
    }
    out.old_to_new[static_cast<std::size_t>(b)] = -1;
  }
  for (std::size_t v = 0; v < full; ++v) {
    if (out.old_to_new[v] == -1) continue;
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(static_cast<Vertex>(v));
  }

  std::vector<Edge> edges;
  const auto link = [&](Vertex a, Vertex b) {
    const Vertex na = out.old_to_new[static_cast<std::size_t>(a)];
    const Vertex nb = out.old_to_new[static_cast<std::size_t>(b)];
    if (na >= 0 && nb >= 0) edges.emplace_back(na, nb);
  };
  for (int i = 0; i < spec.rows; ++i) {
    for (int j = 0; j < spec.cols; ++j) {
      for (int a = 0; a < spec.shore; ++a) {
        const Vertex vert = chimera_index(spec, i, j, 0, a);
        const Vertex horz = chimera_index(spec, i, j, 1, a);
        for (int b = 0; b < spec.shore; ++b) link(vert, chimera_index(spec, i, j, 1, b));
        if (i + 1 < spec.rows) link(vert, chimera_index(spec, i + 1, j, 0, a));
        if (j + 1 < spec.cols) link(horz, chimera_index(spec, i, j + 1, 1, a));
      }
    }
  }
  out.graph = build_graph(static_cast<std::int64_t>(out.new_to_old.size()), edges);
  return out;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return build_graph(n, edges);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return build_graph(static_cast<std::int64_t>(rows) * cols, edges);
}

Graph random_cubic_graph(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("random cubic graph needs an even n >= 4");
  }
  Rng rng(seed);
  std::vector<Vertex> points(static_cast<std::size_t>(3 * n));
  for (std::size_t p = 0; p < points.size(); ++p) points[p] = static_cast<Vertex>(p / 3);

  std::vector<Edge> edges;
  for (;;) {
    rng.shuffle(points);
    edges.clear();
    bool simple = true;
    for (std::size_t p = 0; p < points.size() && simple; p += 2) {
      const Vertex u = std::min(points[p], points[p + 1]);
      const Vertex v = std::max(points[p], points[p + 1]);
      simple = u != v;
      edges.emplace_back(u, v);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) == edges.end()) break;
  }
  return build_graph(n, edges);
}

}  // namespace minorembed
