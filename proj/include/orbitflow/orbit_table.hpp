#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace orbitflow {

// Orbit numbering (1-based, as printed in every output):
//   k=3: 1 chain leaf, 2 chain center, 3 triangle
//   k=4: 1 star leaf, 2 star center, 3 path end, 4 path middle, 5 cycle,
//        6 paw tail, 7 paw degree-3 node, 8 paw triangle pair,
//        9 diamond degree-2, 10 diamond degree-3, 11 clique
// Graphlet classes (1-based), ordered by edge count:
//   k=3: 1 chain, 2 triangle
//   k=4: 1 star, 2 path, 3 cycle, 4 paw, 5 diamond, 6 clique
// Internally both are 0-based column indices.

struct OrbitId {
  int k = 0;
  int index = 0;  // 1-based
  friend bool operator==(const OrbitId&, const OrbitId&) = default;
};

struct GraphletInfo {
  std::string_view name;
  int edge_count;
};

struct OrbitInfo {
  std::string_view name;
  std::size_t graphlet;  // 0-based class
};

struct MaskEntry {
  bool connected = false;
  std::uint8_t graphlet = 0;             // 0-based class, valid when connected
  std::array<std::uint8_t, 4> orbit{};  // 0-based orbit per position
};

// Bit of the node pair (i, j), i < j, inside a k-node adjacency mask. Pairs
// are numbered lexicographically: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3) for
// k=4 and (0,1),(0,2),(1,2) for k=3.
constexpr int pair_bit(int k, int i, int j) {
  if (i > j) {
    const int tmp = i;
    i = j;
    j = tmp;
  }
  return k == 3 ? i + j - 1 : (i == 0 ? j - 1 : i + j);
}

// Lookup from induced-adjacency mask to graphlet class and per-position
// orbits. The constructor checks the orbit partition of every connected
// mask against the automorphism group found by trying all k! permutations
// and throws std::logic_error on a mismatch.
class ClassificationTable {
 public:
  explicit ClassificationTable(int k);

  // Shared, lazily built instance for k in {3, 4}.
  static const ClassificationTable& get(int k);

  int k() const noexcept { return k_; }
  std::size_t mask_count() const noexcept { return entries_.size(); }
  std::size_t orbit_count() const noexcept { return orbits_.size(); }
  std::size_t graphlet_count() const noexcept { return graphlets_.size(); }

  const MaskEntry& operator[](std::uint32_t mask) const noexcept { return entries_[mask]; }
  const GraphletInfo& graphlet(std::size_t c) const { return graphlets_.at(c); }
  const OrbitInfo& orbit(std::size_t o) const { return orbits_.at(o); }

  // Orbits belonging to class c, ascending.
  std::vector<std::size_t> orbits_of(std::size_t c) const;

 private:
  int k_;
  std::vector<MaskEntry> entries_;
  std::vector<GraphletInfo> graphlets_;
  std::vector<OrbitInfo> orbits_;
};

// Throws InvalidArgument unless k is 3 or 4.
void check_graphlet_size(int k);

}  // namespace orbitflow
