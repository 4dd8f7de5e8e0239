#include "minorembed/verifier.hpp"

#include <stdexcept>

namespace minorembed {

namespace {

void check_shape(const Graph& g, const Graph& h, const std::vector<VertexSet>& chains) {
  if (chains.size() != h.vertex_count()) {
    throw std::invalid_argument("model has " + std::to_string(chains.size()) +
                                " chains for " + std::to_string(h.vertex_count()) +
                                " H vertices");
  }
  for (const auto& chain : chains) {
    for (Vertex v : chain) {
      if (!g.contains(v)) {
        throw std::out_of_range("chain vertex " + std::to_string(v) + " is not in G");
      }
    }
  }
}

// Connectivity of the subgraph induced by `chain`, by a BFS restricted to it.
// Returns a member not reached from the first one, or -1.
Vertex unreachable_member(const Graph& g, const VertexSet& chain, std::vector<int>& mark,
                          int stamp) {
  for (Vertex v : chain) mark[static_cast<std::size_t>(v)] = stamp;
  std::vector<Vertex> queue{chain.front()};
  mark[static_cast<std::size_t>(chain.front())] = -stamp;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex u : g.neighbors(queue[head])) {
      if (mark[static_cast<std::size_t>(u)] == stamp) {
        mark[static_cast<std::size_t>(u)] = -stamp;
        queue.push_back(u);
      }
    }
  }
  for (Vertex v : chain) {
    if (mark[static_cast<std::size_t>(v)] == stamp) return v;
  }
  return -1;
}

bool touches(const Graph& g, const VertexSet& a, const std::vector<char>& in_b) {
  for (Vertex u : a) {
    for (Vertex v : g.neighbors(u)) {
      if (in_b[static_cast<std::size_t>(v)]) return true;
    }
  }
  return false;
}

std::vector<Violation> check(const Graph& g, const Graph& h, const std::vector<VertexSet>& chains,
                             bool require_disjoint) {
  check_shape(g, h, chains);
  std::vector<Violation> out;

  std::vector<int> mark(g.vertex_count(), 0);
  for (Vertex x = 0; static_cast<std::size_t>(x) < chains.size(); ++x) {
    const auto& chain = chains[static_cast<std::size_t>(x)];
    if (chain.empty()) {
      out.push_back({ViolationKind::empty_chain, {x}, {}});
      continue;
    }
    if (Vertex cut = unreachable_member(g, chain, mark, x + 1); cut >= 0) {
      out.push_back({ViolationKind::disconnected_chain, {x}, {chain.front(), cut}});
    }
  }

  if (require_disjoint) {
    std::vector<Vertex> owner(g.vertex_count(), -1);
    for (Vertex x = 0; static_cast<std::size_t>(x) < chains.size(); ++x) {
      for (Vertex v : chains[static_cast<std::size_t>(x)]) {
        auto& o = owner[static_cast<std::size_t>(v)];
        if (o >= 0 && o != x) {
          out.push_back({ViolationKind::overlap, {o, x}, {v}});
        } else {
          o = x;
        }
      }
    }
  }

  std::vector<char> in_chain(g.vertex_count(), 0);
  for (Vertex x = 0; static_cast<std::size_t>(x) < h.vertex_count(); ++x) {
    const auto& cx = chains[static_cast<std::size_t>(x)];
    for (Vertex v : cx) in_chain[static_cast<std::size_t>(v)] = 1;
    for (Vertex y : h.neighbors(x)) {
      if (y <= x) continue;
      const auto& cy = chains[static_cast<std::size_t>(y)];
      if (!touches(g, cy, in_chain)) {
        out.push_back({ViolationKind::missing_edge, {x, y}, {}});
      }
    }
    for (Vertex v : cx) in_chain[static_cast<std::size_t>(v)] = 0;
  }
  return out;
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::empty_chain: return "empty-chain";
    case ViolationKind::disconnected_chain: return "disconnected-chain";
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::missing_edge: return "missing-edge";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::string out(to_string(kind));
  out += " h:";
  for (Vertex x : h_vertices) out += " " + std::to_string(x);
  if (!witness.empty()) {
    out += " g:";
    for (Vertex v : witness) out += " " + std::to_string(v);
  }
  return out;
}

std::vector<Violation> verify_embedding(const Graph& g, const Graph& h,
                                        const std::vector<VertexSet>& chains) {
  return check(g, h, chains, true);
}

std::vector<Violation> verify_decomposition(const Graph& g, const Graph& h,
                                            const std::vector<VertexSet>& chains) {
  return check(g, h, chains, false);
}

}  // namespace minorembed
