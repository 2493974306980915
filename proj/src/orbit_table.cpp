#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "orbitflow/error.hpp"
#include "orbitflow/orbit_table.hpp"

namespace orbitflow {

void check_graphlet_size(int k) {
  if (k != 3 && k != 4)
    throw InvalidArgument("graphlet size must be 3 or 4, got " + std::to_string(k));
}

namespace {

bool adjacent(std::uint32_t mask, int k, int i, int j) {
  return i != j && ((mask >> pair_bit(k, i, j)) & 1u) != 0;
}

bool is_connected(std::uint32_t mask, int k) {
  std::uint32_t seen = 1;
  for (int round = 0; round < k; ++round)
    for (int i = 0; i < k; ++i)
      if ((seen >> i) & 1u)
        for (int j = 0; j < k; ++j)
          if (adjacent(mask, k, i, j)) seen |= 1u << j;
  return seen == (1u << k) - 1;
}

// Class and orbit are both determined by (edge count, degree pattern) for
// connected graphs on 3 or 4 nodes.
void classify(std::uint32_t mask, int k, MaskEntry& entry) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (adjacent(mask, k, i, j)) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  const int max_deg = *std::max_element(deg.begin(), deg.begin() + k);
  entry.connected = true;
  auto set_orbits = [&](auto orbit_of_degree) {
    for (int p = 0; p < k; ++p) entry.orbit[p] = static_cast<std::uint8_t>(orbit_of_degree(deg[p]));
  };

  if (k == 3) {
    if (edges == 2) {
      entry.graphlet = 0;
      set_orbits([](int d) { return d == 1 ? 0 : 1; });
    } else {
      entry.graphlet = 1;
      set_orbits([](int) { return 2; });
    }
    return;
  }
  switch (edges) {
    case 3:
      if (max_deg == 3) {
        entry.graphlet = 0;  // star
        set_orbits([](int d) { return d == 3 ? 1 : 0; });
      } else {
        entry.graphlet = 1;  // path
        set_orbits([](int d) { return d == 1 ? 2 : 3; });
      }
      break;
    case 4:
      if (max_deg == 2) {
        entry.graphlet = 2;  // cycle
        set_orbits([](int) { return 4; });
      } else {
        entry.graphlet = 3;  // paw
        set_orbits([](int d) { return d == 1 ? 5 : (d == 3 ? 6 : 7); });
      }
      break;
    case 5:
      entry.graphlet = 4;  // diamond
      set_orbits([](int d) { return d == 2 ? 8 : 9; });
      break;
    default:
      entry.graphlet = 5;  // clique
      set_orbits([](int) { return 10; });
      break;
  }
}

std::uint32_t permute_mask(std::uint32_t mask, int k, const std::array<int, 4>& perm) {
  std::uint32_t out = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (adjacent(mask, k, i, j)) out |= 1u << pair_bit(k, perm[i], perm[j]);
  return out;
}

// Same orbit label <=> related by an automorphism of the mask.
void verify_against_automorphisms(const std::vector<MaskEntry>& entries, int k) {
  for (std::uint32_t mask = 0; mask < entries.size(); ++mask) {
    if (!entries[mask].connected) continue;
    std::array<std::array<bool, 4>, 4> related{};
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      if (permute_mask(mask, k, perm) != mask) continue;
      for (int p = 0; p < k; ++p) related[p][perm[p]] = true;
    } while (std::next_permutation(perm.begin(), perm.begin() + k));
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q)
        if (related[p][q] != (entries[mask].orbit[p] == entries[mask].orbit[q]))
          throw std::logic_error("orbit table disagrees with automorphism group for mask " +
                                 std::to_string(mask));
  }
}

}  // namespace

ClassificationTable::ClassificationTable(int k) : k_(k) {
  check_graphlet_size(k);
  entries_.resize(std::size_t{1} << (k * (k - 1) / 2));
  for (std::uint32_t mask = 0; mask < entries_.size(); ++mask)
    if (is_connected(mask, k)) classify(mask, k, entries_[mask]);
  verify_against_automorphisms(entries_, k);

  if (k == 3) {
    graphlets_ = {{"chain", 2}, {"triangle", 3}};
    orbits_ = {{"chain-leaf", 0}, {"chain-center", 0}, {"triangle", 1}};
  } else {
    graphlets_ = {{"star", 3}, {"path", 3}, {"cycle", 4}, {"paw", 4}, {"diamond", 5}, {"clique", 6}};
    orbits_ = {{"star-leaf", 0},     {"star-center", 0},    {"path-end", 1},
               {"path-middle", 1},   {"cycle", 2},          {"paw-tail", 3},
               {"paw-base", 3},      {"paw-triangle", 3},   {"diamond-degree-2", 4},
               {"diamond-degree-3", 4}, {"clique", 5}};
  }
}

const ClassificationTable& ClassificationTable::get(int k) {
  check_graphlet_size(k);
  static const ClassificationTable three(3);
  static const ClassificationTable four(4);
  return k == 3 ? three : four;
}

std::vector<std::size_t> ClassificationTable::orbits_of(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t o = 0; o < orbits_.size(); ++o)
    if (orbits_[o].graphlet == c) out.push_back(o);
  return out;
}

}  // namespace orbitflow
