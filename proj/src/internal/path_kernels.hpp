#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "orbitflow/graph.hpp"

// Per-source / per-node pieces shared by the OpenMP and serial metric kernels.
namespace orbitflow::internal {

struct PathTotals {
  std::uint64_t distance_sum = 0;
  std::uint64_t pairs = 0;
};

inline PathTotals bfs_totals(const StaticGraph& g, NodeIndex source, std::vector<std::int64_t>& dist,
                      std::vector<NodeIndex>& queue) {
  PathTotals totals;
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeIndex u = queue[head];
    for (NodeIndex w : g.neighbors(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      totals.distance_sum += static_cast<std::uint64_t>(dist[w]);
      ++totals.pairs;
      queue.push_back(w);
    }
  }
  return totals;
}

inline std::uint64_t triangles_at(const StaticGraph& g, NodeIndex v) {
  const auto nbrs = g.neighbors(v);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (g.has_edge(nbrs[i], nbrs[j])) ++count;
  return count;
}

}  // namespace orbitflow::internal
