#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "orbitflow/error.hpp"
#include "orbitflow/synthetic.hpp"

namespace orbitflow::synth {

namespace {

// Builds a TemporalEdgeList with labels "0".."n-1" so ids equal node numbers.
TemporalEdgeList make_list(std::size_t nodes, std::vector<EdgeEvent> events, Timestamp width) {
  std::stable_sort(events.begin(), events.end(),
                   [](const EdgeEvent& a, const EdgeEvent& b) { return a.t < b.t; });
  TemporalEdgeList out;
  for (std::size_t i = 0; i < nodes; ++i) out.labels.intern(std::to_string(i));
  out.events = std::move(events);
  // pin the origin to 0 so window i starts at i * width
  if (!out.events.empty() && out.events.front().t < width) out.events.front().t = 0;
  out.origin = out.events.empty() ? 0 : out.events.front().t;
  return out;
}

}  // namespace

StaticGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return StaticGraph(n, edges);
}

TemporalEdgeList densifying_communities(const DensifyingParams& params, std::uint64_t seed) {
  if (params.community_size < 3 || params.communities == 0 || params.width <= 0)
    throw InvalidArgument("densifying communities need size >= 3, at least one community and width > 0");
  std::mt19937_64 rng(seed);
  const std::size_t nodes = params.communities * params.community_size;
  std::uniform_int_distribution<Timestamp> jitter(0, params.width - 1);
  std::uniform_int_distribution<NodeIndex> any_node(0, static_cast<NodeIndex>(nodes - 1));
  std::vector<EdgeEvent> events;

  std::vector<std::vector<Edge>> live(params.communities);
  std::vector<std::vector<Edge>> pending(params.communities);
  for (std::size_t c = 0; c < params.communities; ++c) {
    const auto base = static_cast<NodeIndex>(c * params.community_size);
    std::vector<NodeIndex> members(params.community_size);
    for (std::size_t i = 0; i < members.size(); ++i) members[i] = base + static_cast<NodeIndex>(i);
    std::shuffle(members.begin(), members.end(), rng);
    const NodeIndex hub = members.front();
    for (std::size_t i = 1; i < members.size(); ++i) live[c].emplace_back(hub, members[i]);
    for (std::size_t i = 1; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) pending[c].emplace_back(members[i], members[j]);
    std::shuffle(pending[c].begin(), pending[c].end(), rng);
  }

  for (std::size_t s = 0; s < params.snapshots; ++s) {
    const Timestamp start = static_cast<Timestamp>(s) * params.width;
    for (std::size_t c = 0; c < params.communities; ++c) {
      if (s > 0 && !pending[c].empty()) {
        live[c].push_back(pending[c].back());
        pending[c].pop_back();
      }
      for (const auto& [u, v] : live[c]) events.push_back({u, v, start + jitter(rng)});
    }
    for (std::size_t e = 0; e < params.noise_edges_per_snapshot; ++e) {
      const NodeIndex u = any_node(rng);
      const NodeIndex v = any_node(rng);
      if (u != v) events.push_back({u, v, start + jitter(rng)});
    }
  }
  return make_list(nodes, std::move(events), params.width);
}

TemporalEdgeList random_churn(std::size_t nodes, const std::vector<std::size_t>& edges_per_snapshot,
                              Timestamp width, std::uint64_t seed) {
  if (nodes < 2 || width <= 0) throw InvalidArgument("random churn needs >= 2 nodes and width > 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeIndex> any_node(0, static_cast<NodeIndex>(nodes - 1));
  std::uniform_int_distribution<Timestamp> jitter(0, width - 1);
  const std::size_t max_edges = nodes * (nodes - 1) / 2;
  std::vector<EdgeEvent> events;
  for (std::size_t s = 0; s < edges_per_snapshot.size(); ++s) {
    const std::size_t target = std::min(edges_per_snapshot[s], max_edges);
    std::set<Edge> chosen;
    while (chosen.size() < target) {
      NodeIndex u = any_node(rng);
      NodeIndex v = any_node(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      chosen.emplace(u, v);
    }
    const Timestamp start = static_cast<Timestamp>(s) * width;
    for (const auto& [u, v] : chosen) events.push_back({u, v, start + jitter(rng)});
  }
  return make_list(nodes, std::move(events), width);
}

}  // namespace orbitflow::synth
