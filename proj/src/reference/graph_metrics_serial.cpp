#include <vector>

#include "internal/path_kernels.hpp"
#include "orbitflow/error.hpp"
#include "orbitflow/graph_metrics.hpp"

namespace orbitflow::serial {

double characteristic_path_length(const StaticGraph& g) {
  if (g.edge_count() == 0) throw InvalidArgument("characteristic path length of a graph without edges");
  std::vector<std::int64_t> dist(g.node_count());
  std::vector<NodeIndex> queue;
  internal::PathTotals all;
  for (NodeIndex s = 0; s < g.node_count(); ++s) {
    const auto t = internal::bfs_totals(g, s, dist, queue);
    all.distance_sum += t.distance_sum;
    all.pairs += t.pairs;
  }
  return static_cast<double>(all.distance_sum) / static_cast<double>(all.pairs);
}

std::vector<std::uint64_t> triangles_per_node(const StaticGraph& g) {
  std::vector<std::uint64_t> tri(g.node_count(), 0);
  for (NodeIndex v = 0; v < g.node_count(); ++v) tri[v] = internal::triangles_at(g, v);
  return tri;
}

}  // namespace orbitflow::serial
