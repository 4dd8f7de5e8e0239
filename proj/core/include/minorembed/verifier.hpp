#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minorembed/graph.hpp"

namespace minorembed {

enum class ViolationKind { empty_chain, disconnected_chain, overlap, missing_edge };

std::string_view to_string(ViolationKind kind);

/// One failed model condition, re-checkable from (G, H, chains) alone.
struct Violation {
  ViolationKind kind;
  /// H vertices involved: the chain owner, both overlapping owners, or both
  /// endpoints of the uncovered H edge.
  std::vector<Vertex> h_vertices;
  /// G vertices evidencing the failure: the shared vertex for an overlap, a
  /// vertex cut off from the rest of its chain for a disconnected chain.
  std::vector<Vertex> witness;

  std::string describe() const;
  bool operator==(const Violation&) const = default;
};

/// Checks that the chains form a minor model of H in G: each chain is
/// non-empty and connected, chains are disjoint, and every H edge has a G
/// edge between the two chains. Empty result means valid.
///
/// Throws std::invalid_argument when the number of chains differs from the
/// number of H vertices and std::out_of_range for a chain id outside G.
std::vector<Violation> verify_embedding(const Graph& g, const Graph& h,
                                        const std::vector<VertexSet>& chains);

/// Same as verify_embedding without the disjointness condition.
std::vector<Violation> verify_decomposition(const Graph& g, const Graph& h,
                                            const std::vector<VertexSet>& chains);

}  // namespace minorembed
