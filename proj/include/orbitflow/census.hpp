#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orbitflow/graph.hpp"
#include "orbitflow/orbit_table.hpp"

namespace orbitflow {

// A connected induced k-node subgraph: nodes ascending, mask over the pair
// positions of `nodes` (see pair_bit).
struct Occurrence {
  std::array<NodeIndex, 4> nodes{};
  int size = 0;
  std::uint32_t mask = 0;
};

// Induced adjacency mask of `nodes[0..k)` in g.
inline std::uint32_t induced_mask(const StaticGraph& g, std::span<const NodeIndex> nodes) {
  const int k = static_cast<int>(nodes.size());
  std::uint32_t mask = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(nodes[i], nodes[j])) mask |= 1u << pair_bit(k, i, j);
  return mask;
}

namespace detail {

template <class Visitor>
void esu_extend(const StaticGraph& g, int k, NodeIndex root, std::array<NodeIndex, 4>& sub,
                int depth, std::vector<NodeIndex> extension, Visitor& visit) {
  if (depth == k) {
    Occurrence occ;
    occ.size = k;
    std::copy_n(sub.begin(), k, occ.nodes.begin());
    std::sort(occ.nodes.begin(), occ.nodes.begin() + k);
    occ.mask = induced_mask(g, std::span<const NodeIndex>(occ.nodes.data(), k));
    visit(occ);
    return;
  }
  while (!extension.empty()) {
    const NodeIndex w = extension.back();
    extension.pop_back();
    std::vector<NodeIndex> next = extension;
    // Exclusive neighbourhood of w: above the root, outside the current
    // set and not adjacent to any node already in it.
    for (NodeIndex u : g.neighbors(w)) {
      if (u <= root) continue;
      bool blocked = false;
      for (int i = 0; i < depth && !blocked; ++i)
        blocked = sub[i] == u || g.has_edge(sub[i], u);
      if (!blocked) next.push_back(u);
    }
    sub[depth] = w;
    esu_extend(g, k, root, sub, depth + 1, std::move(next), visit);
  }
}

}  // namespace detail

// Visits every connected induced k-set whose smallest node is `root`
// exactly once (ESU set-growth recursion).
template <class Visitor>
void for_each_connected_subgraph_from(const StaticGraph& g, int k, NodeIndex root,
                                      Visitor&& visit) {
  std::array<NodeIndex, 4> sub{};
  sub[0] = root;
  std::vector<NodeIndex> extension;
  for (NodeIndex u : g.neighbors(root))
    if (u > root) extension.push_back(u);
  detail::esu_extend(g, k, root, sub, 1, std::move(extension), visit);
}

// Visits every connected induced k-set of g exactly once. k must be 3 or 4.
template <class Visitor>
void enumerate_connected_subgraphs(const StaticGraph& g, int k, Visitor&& visit) {
  check_graphlet_size(k);
  for (NodeIndex root = 0; root < g.node_count(); ++root)
    for_each_connected_subgraph_from(g, k, root, visit);
}

// n x m orbit counts; row v is the graphlet degree vector of node v.
class OrbitFrequencyMatrix {
 public:
  OrbitFrequencyMatrix() = default;
  OrbitFrequencyMatrix(int k, std::size_t nodes, std::size_t orbits)
      : k_(k), nodes_(nodes), orbits_(orbits), data_(nodes * orbits, 0) {}

  int k() const noexcept { return k_; }
  std::size_t node_count() const noexcept { return nodes_; }
  std::size_t orbit_count() const noexcept { return orbits_; }

  std::uint64_t& at(std::size_t v, std::size_t orbit) { return data_[v * orbits_ + orbit]; }
  std::uint64_t at(std::size_t v, std::size_t orbit) const { return data_[v * orbits_ + orbit]; }
  std::span<const std::uint64_t> row(std::size_t v) const {
    return {data_.data() + v * orbits_, orbits_};
  }
  std::vector<std::uint64_t> column_sums() const;

  OrbitFrequencyMatrix& operator+=(const OrbitFrequencyMatrix& other);
  friend bool operator==(const OrbitFrequencyMatrix&, const OrbitFrequencyMatrix&) = default;

 private:
  int k_ = 0;
  std::size_t nodes_ = 0;
  std::size_t orbits_ = 0;
  std::vector<std::uint64_t> data_;
};

struct CensusResult {
  OrbitFrequencyMatrix orbits;
  std::vector<std::uint64_t> graphlets;  // occurrences per class

  std::uint64_t total_occurrences() const;
  friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

// OpenMP kernel: roots are split across threads, per-thread counts are
// merged by integer addition, so the result is identical for any thread count.
CensusResult run_census(const StaticGraph& g, int k);
OrbitFrequencyMatrix compute_orbit_frequencies(const StaticGraph& g, int k);
std::vector<std::uint64_t> graphlet_class_frequencies(const StaticGraph& g, int k);

namespace serial {
CensusResult run_census(const StaticGraph& g, int k);
}  // namespace serial

}  // namespace orbitflow
