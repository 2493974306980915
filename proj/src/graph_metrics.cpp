#include <algorithm>
#include <cstdint>
#include <vector>

#include "orbitflow/error.hpp"
#include "orbitflow/graph_metrics.hpp"
#include "internal/path_kernels.hpp"

namespace orbitflow {

namespace {

using internal::bfs_totals;
using internal::triangles_at;

double clustering_from_triangles(const StaticGraph& g, const std::vector<std::uint64_t>& tri,
                                 ClusteringMode mode) {
  if (mode == ClusteringMode::Transitivity) {
    std::uint64_t closed = 0;
    std::uint64_t triples = 0;
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      const std::uint64_t d = g.degree(v);
      closed += tri[v];
      triples += d * (d - (d > 0 ? 1 : 0)) / 2;
    }
    return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
  }
  double sum = 0.0;
  std::size_t eligible = 0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (g.degree(v) < 2) continue;
    sum += static_cast<double>(tri[v]) / (d * (d - 1) / 2);
    ++eligible;
  }
  return eligible == 0 ? 0.0 : sum / static_cast<double>(eligible);
}

}  // namespace

double average_degree(const StaticGraph& g) {
  const std::size_t present = g.present_node_count();
  if (present == 0) throw InvalidArgument("average degree of a graph without edges");
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(present);
}

std::vector<std::uint64_t> triangles_per_node(const StaticGraph& g) {
  const auto n = static_cast<std::int64_t>(g.node_count());
  std::vector<std::uint64_t> tri(g.node_count(), 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t v = 0; v < n; ++v) tri[v] = triangles_at(g, static_cast<NodeIndex>(v));
  return tri;
}

double clustering_coefficient(const StaticGraph& g, ClusteringMode mode) {
  return clustering_from_triangles(g, triangles_per_node(g), mode);
}

double characteristic_path_length(const StaticGraph& g) {
  if (g.edge_count() == 0) throw InvalidArgument("characteristic path length of a graph without edges");
  const auto n = static_cast<std::int64_t>(g.node_count());
  std::uint64_t distance_sum = 0;
  std::uint64_t pairs = 0;
#pragma omp parallel reduction(+ : distance_sum, pairs)
  {
    std::vector<std::int64_t> dist(g.node_count());
    std::vector<NodeIndex> queue;
    queue.reserve(g.node_count());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; ++s) {
      if (g.degree(static_cast<NodeIndex>(s)) == 0) continue;
      const auto t = bfs_totals(g, static_cast<NodeIndex>(s), dist, queue);
      distance_sum += t.distance_sum;
      pairs += t.pairs;
    }
  }
  return static_cast<double>(distance_sum) / static_cast<double>(pairs);
}

std::vector<double> relative_size_series(const SnapshotSeries& series) {
  if (series.snapshots.empty()) throw InvalidArgument("empty snapshot series");
  std::vector<double> sizes;
  sizes.reserve(series.size());
  for (const auto& s : series.snapshots) sizes.push_back(static_cast<double>(s.present_node_count()));
  const double peak = *std::max_element(sizes.begin(), sizes.end());
  if (peak == 0) throw InvalidArgument("every snapshot is empty");
  for (auto& s : sizes) s /= peak;
  return sizes;
}

}  // namespace orbitflow
