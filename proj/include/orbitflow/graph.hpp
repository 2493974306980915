#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace orbitflow {

using NodeIndex = std::uint32_t;
using Edge = std::pair<NodeIndex, NodeIndex>;

// Undirected simple graph over a fixed node universe 0..n-1 with sorted
// adjacency lists. Immutable once built.
class StaticGraph {
 public:
  StaticGraph() = default;

  // Builds from an edge list. Duplicate edges (in either orientation) are
  // collapsed; self-loops and out-of-range endpoints throw InvalidArgument.
  StaticGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const NodeIndex> neighbors(NodeIndex v) const noexcept {
    return adjacency_[v];
  }
  std::size_t degree(NodeIndex v) const noexcept { return adjacency_[v].size(); }
  bool has_edge(NodeIndex u, NodeIndex v) const noexcept;

  // Nodes with at least one incident edge.
  std::size_t present_node_count() const noexcept;

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  // Same node universe, nodes relabeled by `perm` (new id = perm[old id]).
  StaticGraph relabeled(std::span<const NodeIndex> perm) const;

  friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

 private:
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace orbitflow
