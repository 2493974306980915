#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "orbitflow/cluster.hpp"
#include "orbitflow/error.hpp"

namespace orbitflow {

const char* linkage_name(Linkage linkage) {
  switch (linkage) {
    case Linkage::Average: return "average";
    case Linkage::Single: return "single";
    case Linkage::Complete: return "complete";
  }
  return "?";
}

namespace {

struct Cluster {
  std::size_t id;
  std::vector<std::size_t> members;  // leaf indices ordered by label
  const std::string* min_label;
};

double linkage_distance(const SquareMatrix& dist, const Cluster& a, const Cluster& b,
                        Linkage linkage) {
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i : a.members)
    for (std::size_t j : b.members) {
      const double d = dist(i, j);
      sum += d;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  switch (linkage) {
    case Linkage::Single: return lo;
    case Linkage::Complete: return hi;
    case Linkage::Average: break;
  }
  return sum / static_cast<double>(a.members.size() * b.members.size());
}

}  // namespace

MergeTree hierarchical_cluster(const SimilarityMatrix& sim, Linkage linkage) {
  const std::size_t n = sim.names.size();
  if (n < 2) throw InvalidArgument("clustering needs at least 2 networks");
  if (sim.values.size() != n) throw InvalidArgument("similarity matrix size does not match names");

  SquareMatrix dist(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      dist(i, j) = i == j ? 0.0 : (is_agreement(sim.kind) ? 1.0 - sim.values(i, j) : sim.values(i, j));

  std::vector<Cluster> active;
  for (std::size_t i = 0; i < n; ++i) active.push_back({i, {i}, &sim.names[i]});

  MergeTree tree;
  tree.leaves = sim.names;
  while (active.size() > 1) {
    std::size_t best_a = 0;
    std::size_t best_b = 1;
    double best = std::numeric_limits<double>::infinity();
    std::pair<const std::string*, const std::string*> best_key{nullptr, nullptr};
    for (std::size_t a = 0; a < active.size(); ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        const double d = linkage_distance(dist, active[a], active[b], linkage);
        const std::string* first = active[a].min_label;
        const std::string* second = active[b].min_label;
        if (*second < *first) std::swap(first, second);
        const bool better =
            d < best || (d == best && best_key.first != nullptr && std::tie(*first, *second) < std::tie(*best_key.first, *best_key.second));
        if (better) {
          best = d;
          best_a = a;
          best_b = b;
          best_key = {first, second};
        }
      }
    Cluster& x = active[best_a];
    Cluster& y = active[best_b];
    const bool x_first = *x.min_label < *y.min_label;
    Cluster merged;
    merged.id = n + tree.merges.size();
    merged.members = x.members;
    merged.members.insert(merged.members.end(), y.members.begin(), y.members.end());
    std::sort(merged.members.begin(), merged.members.end(),
              [&](std::size_t i, std::size_t j) { return sim.names[i] < sim.names[j]; });
    merged.min_label = x_first ? x.min_label : y.min_label;
    tree.merges.push_back({x_first ? x.id : y.id, x_first ? y.id : x.id, best, merged.members.size()});
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_b));
    active[best_a] = std::move(merged);
  }
  return tree;
}

std::vector<std::size_t> cut_tree(const MergeTree& tree, std::size_t clusters) {
  const std::size_t n = tree.leaves.size();
  if (clusters == 0 || clusters > n)
    throw InvalidArgument("cannot cut " + std::to_string(n) + " leaves into " +
                          std::to_string(clusters) + " clusters");
  std::vector<std::size_t> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i + clusters < n; ++i) {
    const auto& m = tree.merges[i];
    parent[find(m.left)] = n + i;
    parent[find(m.right)] = n + i;
  }
  std::vector<std::size_t> labels(n);
  std::vector<std::size_t> seen_roots;
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    const auto root = find(leaf);
    auto it = std::find(seen_roots.begin(), seen_roots.end(), root);
    labels[leaf] = static_cast<std::size_t>(it - seen_roots.begin());
    if (it == seen_roots.end()) seen_roots.push_back(root);
  }
  return labels;
}

}  // namespace orbitflow
