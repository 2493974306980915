#include "internal/census_kernel.hpp"

namespace orbitflow::serial {

CensusResult run_census(const StaticGraph& g, int k) {
  const auto& table = ClassificationTable::get(k);
  CensusResult total = internal::empty_census(g, table);
  for (NodeIndex root = 0; root < g.node_count(); ++root)
    internal::census_root(g, table, root, total);
  return total;
}

}  // namespace orbitflow::serial
