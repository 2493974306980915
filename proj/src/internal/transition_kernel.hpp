#pragma once

#include "orbitflow/census.hpp"
#include "orbitflow/orbit_table.hpp"
#include "orbitflow/transitions.hpp"

namespace orbitflow::internal {

// Transitions of the k-sets rooted at `root` in `from`, added into `out`.
inline void transitions_root(const StaticGraph& from, const StaticGraph& to,
                             const ClassificationTable& table, NodeIndex root,
                             OrbitTransitionMatrix& out) {
  const int k = table.k();
  for_each_connected_subgraph_from(from, k, root, [&](const Occurrence& occ) {
    const MaskEntry& source = table[occ.mask];
    const MaskEntry& target =
        table[induced_mask(to, std::span<const NodeIndex>(occ.nodes.data(), k))];
    for (int p = 0; p < k; ++p) {
      if (target.connected)
        ++out.at(source.orbit[p], target.orbit[p]);
      else
        ++out.dissolved(source.orbit[p]);
    }
  });
}

}  // namespace orbitflow::internal
