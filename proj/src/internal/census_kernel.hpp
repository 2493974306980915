#pragma once

#include "orbitflow/census.hpp"
#include "orbitflow/orbit_table.hpp"

namespace orbitflow::internal {

inline CensusResult empty_census(const StaticGraph& g, const ClassificationTable& table) {
  return CensusResult{OrbitFrequencyMatrix(table.k(), g.node_count(), table.orbit_count()),
                      std::vector<std::uint64_t>(table.graphlet_count(), 0)};
}

// Census of the k-sets rooted at `root`, added into `out`.
inline void census_root(const StaticGraph& g, const ClassificationTable& table, NodeIndex root,
                        CensusResult& out) {
  for_each_connected_subgraph_from(g, table.k(), root, [&](const Occurrence& occ) {
    const MaskEntry& entry = table[occ.mask];
    ++out.graphlets[entry.graphlet];
    for (int p = 0; p < occ.size; ++p) ++out.orbits.at(occ.nodes[p], entry.orbit[p]);
  });
}

}  // namespace orbitflow::internal
