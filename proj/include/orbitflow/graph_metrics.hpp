#pragma once

#include <vector>

#include "orbitflow/graph.hpp"
#include "orbitflow/temporal.hpp"

namespace orbitflow {

// 2|E| / (number of non-isolated nodes). Throws InvalidArgument when the
// graph has no edges.
double average_degree(const StaticGraph& g);

enum class ClusteringMode {
  AverageLocal,  // mean local coefficient over nodes of degree >= 2
  Transitivity,  // 3 * triangles / connected triples
};

// 0 when no node has degree >= 2.
double clustering_coefficient(const StaticGraph& g,
                              ClusteringMode mode = ClusteringMode::AverageLocal);

// Mean BFS distance over ordered reachable pairs (u != v). Unreachable pairs
// are left out. Throws InvalidArgument when the graph has no edges.
// Parallel over BFS sources; integer reduction, so the result does not
// depend on the thread count.
double characteristic_path_length(const StaticGraph& g);

// Non-isolated node count of each snapshot over the maximum of those counts.
std::vector<double> relative_size_series(const SnapshotSeries& series);

// Triangles through each node.
std::vector<std::uint64_t> triangles_per_node(const StaticGraph& g);

namespace serial {
double characteristic_path_length(const StaticGraph& g);
std::vector<std::uint64_t> triangles_per_node(const StaticGraph& g);
}  // namespace serial

}  // namespace orbitflow
