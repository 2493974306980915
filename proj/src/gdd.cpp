#include "orbitflow/error.hpp"
#include "orbitflow/gdd.hpp"

namespace orbitflow {

GraphletDegreeDistribution compute_gdd(const OrbitFrequencyMatrix& fr, GddScaling scaling) {
  GraphletDegreeDistribution gdd;
  gdd.node_count = fr.node_count();
  gdd.orbits.resize(fr.orbit_count());
  for (std::size_t j = 0; j < fr.orbit_count(); ++j) {
    gdd.orbit_ids.push_back(OrbitId{fr.k(), static_cast<int>(j + 1)});
    auto& dist = gdd.orbits[j];
    for (std::size_t v = 0; v < fr.node_count(); ++v) {
      const auto value = fr.at(v, j);
      if (value == 0)
        ++dist.zero_count;
      else
        ++dist.counts[value];
    }
    double total = 0.0;
    for (const auto& [degree, nodes] : dist.counts) {
      const double scaled = scaling == GddScaling::InverseK
                                ? static_cast<double>(nodes) / static_cast<double>(degree)
                                : static_cast<double>(nodes);
      dist.normalized[degree] = scaled;
      total += scaled;
    }
    for (auto& [degree, value] : dist.normalized) value /= total;
  }
  return gdd;
}

GraphletDegreeDistribution concat_gdd(const GraphletDegreeDistribution& first,
                                      const GraphletDegreeDistribution& second) {
  if (first.node_count != second.node_count)
    throw InvalidArgument("graphlet degree distributions cover different node counts");
  GraphletDegreeDistribution out = first;
  out.orbit_ids.insert(out.orbit_ids.end(), second.orbit_ids.begin(), second.orbit_ids.end());
  out.orbits.insert(out.orbits.end(), second.orbits.begin(), second.orbits.end());
  return out;
}

}  // namespace orbitflow
