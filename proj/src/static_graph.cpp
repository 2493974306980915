#include <algorithm>
#include <string>

#include "orbitflow/error.hpp"
#include "orbitflow/graph.hpp"

namespace orbitflow {

StaticGraph::StaticGraph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside node range " + std::to_string(n));
    if (u == v) throw InvalidArgument("self-loop on node " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::size_t endpoints = 0;
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.shrink_to_fit();
    endpoints += list.size();
  }
  edge_count_ = endpoints / 2;
}

bool StaticGraph::has_edge(NodeIndex u, NodeIndex v) const noexcept {
  const auto& a = adjacency_[u];
  const auto& b = adjacency_[v];
  // search the shorter list
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                              : std::binary_search(b.begin(), b.end(), u);
}

std::size_t StaticGraph::present_node_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(adjacency_.begin(), adjacency_.end(),
                                                [](const auto& l) { return !l.empty(); }));
}

std::vector<Edge> StaticGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeIndex u = 0; u < adjacency_.size(); ++u)
    for (NodeIndex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

StaticGraph StaticGraph::relabeled(std::span<const NodeIndex> perm) const {
  if (perm.size() != node_count()) throw InvalidArgument("permutation size mismatch");
  std::vector<Edge> mapped;
  mapped.reserve(edge_count_);
  for (const auto& [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return StaticGraph(node_count(), mapped);
}

}  // namespace orbitflow
