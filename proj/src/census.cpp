#include <numeric>

#include "internal/census_kernel.hpp"
#include "orbitflow/census.hpp"
#include "orbitflow/error.hpp"

namespace orbitflow {

std::vector<std::uint64_t> OrbitFrequencyMatrix::column_sums() const {
  std::vector<std::uint64_t> sums(orbits_, 0);
  for (std::size_t v = 0; v < nodes_; ++v)
    for (std::size_t j = 0; j < orbits_; ++j) sums[j] += at(v, j);
  return sums;
}

OrbitFrequencyMatrix& OrbitFrequencyMatrix::operator+=(const OrbitFrequencyMatrix& other) {
  if (other.nodes_ != nodes_ || other.orbits_ != orbits_)
    throw InvalidArgument("orbit frequency matrices differ in shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

std::uint64_t CensusResult::total_occurrences() const {
  return std::accumulate(graphlets.begin(), graphlets.end(), std::uint64_t{0});
}

CensusResult run_census(const StaticGraph& g, int k) {
  const auto& table = ClassificationTable::get(k);
  CensusResult total = internal::empty_census(g, table);
  const auto n = static_cast<std::int64_t>(g.node_count());
#pragma omp parallel
  {
    CensusResult local = internal::empty_census(g, table);
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t root = 0; root < n; ++root)
      internal::census_root(g, table, static_cast<NodeIndex>(root), local);
#pragma omp critical(orbitflow_census_merge)
    {
      total.orbits += local.orbits;
      for (std::size_t c = 0; c < total.graphlets.size(); ++c) total.graphlets[c] += local.graphlets[c];
    }
  }
  return total;
}

OrbitFrequencyMatrix compute_orbit_frequencies(const StaticGraph& g, int k) {
  return run_census(g, k).orbits;
}

std::vector<std::uint64_t> graphlet_class_frequencies(const StaticGraph& g, int k) {
  return run_census(g, k).graphlets;
}

}  // namespace orbitflow
