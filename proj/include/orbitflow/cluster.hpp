#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbitflow/agreement.hpp"

namespace orbitflow {

enum class Linkage { Average, Single, Complete };

// Cluster ids: leaves are 0..N-1, the cluster formed by merge i is N+i.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;
  std::size_t size = 0;
};

struct MergeTree {
  std::vector<std::string> leaves;
  std::vector<Merge> merges;
};

// Agglomerative clustering. Agreement kinds are turned into distances as
// 1 - value. Among equally close pairs the one whose smallest member labels
// (lower label first) compare lexicographically smallest is merged.
MergeTree hierarchical_cluster(const SimilarityMatrix& sim, Linkage linkage = Linkage::Average);

// Flat assignment after undoing the last `clusters - 1` merges. Labels are
// numbered by first appearance in leaf order.
std::vector<std::size_t> cut_tree(const MergeTree& tree, std::size_t clusters);

const char* linkage_name(Linkage linkage);

}  // namespace orbitflow
