#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitflow/graph.hpp"
#include "orbitflow/temporal.hpp"

// Generators for test fixtures, benchmarks and the grouping experiment.
namespace orbitflow::synth {

StaticGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

struct DensifyingParams {
  std::size_t communities = 8;
  std::size_t community_size = 5;
  std::size_t snapshots = 8;
  Timestamp width = 10;
  std::size_t noise_edges_per_snapshot = 2;
};

// Communities start as stars and gain one member-member edge per snapshot
// until they are cliques. Every live edge is re-emitted in each window, so
// the ActiveEdge and Aggregate readings agree on community edges. A few
// transient random edges per snapshot add noise.
TemporalEdgeList densifying_communities(const DensifyingParams& params, std::uint64_t seed);

// Independent uniform random edge sets per window, edges_per_snapshot[i]
// edges in window i.
TemporalEdgeList random_churn(std::size_t nodes, const std::vector<std::size_t>& edges_per_snapshot,
                              Timestamp width, std::uint64_t seed);

}  // namespace orbitflow::synth
