#include <string>

#include "orbitflow/error.hpp"
#include "orbitflow/temporal.hpp"

namespace orbitflow {

void SnapshotPolicy::validate() const {
  if (width <= 0) throw InvalidArgument("snapshot width must be positive, got " + std::to_string(width));
  if (count < 2)
    throw InvalidArgument("snapshot count must be at least 2, got " + std::to_string(count));
}

SnapshotSeries build_snapshots(const TemporalEdgeList& edges, const SnapshotPolicy& policy) {
  policy.validate();
  SnapshotSeries series;
  series.policy = policy;
  series.origin = policy.origin_override.value_or(edges.origin);

  const auto count = static_cast<Timestamp>(policy.count);
  std::vector<std::vector<Edge>> window_edges(policy.count);
  for (const auto& e : edges.events) {
    const Timestamp offset = e.t - series.origin;
    // floor division; events before the origin get a negative window
    Timestamp window = offset / policy.width;
    if (offset < 0 && offset % policy.width != 0) --window;
    if (window >= count) {
      ++series.discarded_events;
      continue;
    }
    if (window < 0) {
      if (policy.mode == SnapshotMode::ActiveEdge) {
        ++series.discarded_events;
        continue;
      }
      window = 0;
    }
    window_edges[static_cast<std::size_t>(window)].emplace_back(e.u, e.v);
  }

  const std::size_t n = edges.node_count();
  series.snapshots.reserve(policy.count);
  std::vector<Edge> running;
  for (std::size_t i = 0; i < policy.count; ++i) {
    if (policy.mode == SnapshotMode::Aggregate) {
      running.insert(running.end(), window_edges[i].begin(), window_edges[i].end());
      series.snapshots.emplace_back(n, running);
      running = series.snapshots.back().edges();
    } else {
      series.snapshots.emplace_back(n, window_edges[i]);
    }
  }
  return series;
}

StaticGraph aggregate_graph(const TemporalEdgeList& edges) {
  std::vector<Edge> all;
  all.reserve(edges.events.size());
  for (const auto& e : edges.events) all.emplace_back(e.u, e.v);
  return StaticGraph(edges.node_count(), all);
}

}  // namespace orbitflow
