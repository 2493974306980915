#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "orbitflow/census.hpp"
#include "orbitflow/orbit_table.hpp"

namespace orbitflow {

enum class GddScaling {
  InverseK,  // s(k) = d(k)/k, then divide by the sum of s
  Plain,     // d(k) divided by the sum of d over k >= 1
};

struct OrbitDistribution {
  std::map<std::uint64_t, std::uint64_t> counts;  // k >= 1 -> nodes with exactly k appearances
  std::uint64_t zero_count = 0;                   // nodes never in this orbit
  std::map<std::uint64_t, double> normalized;     // sums to 1 when touched
  bool touched() const noexcept { return !counts.empty(); }
};

struct GraphletDegreeDistribution {
  std::vector<OrbitId> orbit_ids;
  std::vector<OrbitDistribution> orbits;
  std::size_t node_count = 0;
};

GraphletDegreeDistribution compute_gdd(const OrbitFrequencyMatrix& fr,
                                       GddScaling scaling = GddScaling::InverseK);

// Concatenates the orbit sets of two distributions over the same nodes
// (used to add k=3 orbits in front of the k=4 ones).
GraphletDegreeDistribution concat_gdd(const GraphletDegreeDistribution& first,
                                      const GraphletDegreeDistribution& second);

}  // namespace orbitflow
