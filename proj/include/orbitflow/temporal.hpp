#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "orbitflow/graph.hpp"

namespace orbitflow {

using Timestamp = std::int64_t;

// Bijective label <-> dense id map. Ids are assigned in order of insertion.
class NodeLabels {
 public:
  NodeIndex intern(std::string_view label);
  std::optional<NodeIndex> find(std::string_view label) const;
  const std::string& label(NodeIndex id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& all() const noexcept { return labels_; }

  friend bool operator==(const NodeLabels& a, const NodeLabels& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> ids_;
};

struct EdgeEvent {
  NodeIndex u;
  NodeIndex v;
  Timestamp t;
  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

struct TemporalEdgeList {
  NodeLabels labels;
  std::vector<EdgeEvent> events;  // sorted by t, stable w.r.t. input order
  Timestamp origin = 0;           // earliest timestamp (0 when empty)
  std::size_t dropped_self_loops = 0;

  std::size_t node_count() const noexcept { return labels.size(); }
  friend bool operator==(const TemporalEdgeList&, const TemporalEdgeList&) = default;
};

enum class Separator { Whitespace, Comma };

struct ParseOptions {
  Separator separator = Separator::Whitespace;
};

// Reads "u v t" lines. '#' starts a comment line; blank lines are skipped.
// Ids are assigned by first appearance after the stable sort on t, so a
// parse -> serialize -> parse cycle reproduces the same list.
TemporalEdgeList parse_edge_list(std::istream& in, const ParseOptions& options = {});
TemporalEdgeList parse_edge_list(std::string_view text, const ParseOptions& options = {});
TemporalEdgeList read_edge_list_file(const std::string& path, const ParseOptions& options = {});

void serialize_edge_list(const TemporalEdgeList& edges, std::ostream& out,
                         const ParseOptions& options = {});

enum class SnapshotMode { ActiveEdge, Aggregate };

struct SnapshotPolicy {
  SnapshotMode mode = SnapshotMode::ActiveEdge;
  Timestamp width = 1;
  std::size_t count = 2;
  std::optional<Timestamp> origin_override;

  // Throws InvalidArgument unless width > 0 and count >= 2.
  void validate() const;
};

struct SnapshotSeries {
  std::vector<StaticGraph> snapshots;  // all over the same node universe
  SnapshotPolicy policy;
  Timestamp origin = 0;
  std::size_t discarded_events = 0;  // outside the covered time range

  std::size_t size() const noexcept { return snapshots.size(); }
  std::size_t node_count() const noexcept {
    return snapshots.empty() ? 0 : snapshots.front().node_count();
  }
};

// Snapshot i covers the half-open window [origin + width*i, origin + width*(i+1)).
// ActiveEdge keeps an edge only in windows holding one of its events;
// Aggregate keeps it from its first event onwards (events before the origin
// count from snapshot 0).
SnapshotSeries build_snapshots(const TemporalEdgeList& edges, const SnapshotPolicy& policy);

// The union of every event's edge: the network's final aggregate state.
StaticGraph aggregate_graph(const TemporalEdgeList& edges);

}  // namespace orbitflow
