#include <string>

#include "internal/transition_kernel.hpp"
#include "orbitflow/error.hpp"

namespace orbitflow::serial {

OrbitTransitionMatrix enumerate_transitions(const StaticGraph& from, const StaticGraph& to, int k) {
  if (from.node_count() != to.node_count())
    throw InvalidArgument("snapshots have different node universes");
  const auto& table = ClassificationTable::get(k);
  OrbitTransitionMatrix total(k);
  for (NodeIndex root = 0; root < from.node_count(); ++root)
    internal::transitions_root(from, to, table, root, total);
  total.set_pairs_processed(1);
  return total;
}

OrbitTransitionMatrix accumulate_series(const SnapshotSeries& series, int k) {
  if (series.size() < 2)
    throw InvalidArgument("transitions need at least 2 snapshots, got " +
                          std::to_string(series.size()));
  OrbitTransitionMatrix total(k);
  for (std::size_t i = 0; i + 1 < series.size(); ++i)
    total += serial::enumerate_transitions(series.snapshots[i], series.snapshots[i + 1], k);
  return total;
}

}  // namespace orbitflow::serial
