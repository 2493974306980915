#include <numeric>
#include <string>

#include "internal/transition_kernel.hpp"
#include "orbitflow/error.hpp"
#include "orbitflow/transitions.hpp"

namespace orbitflow {

OrbitTransitionMatrix::OrbitTransitionMatrix(int k)
    : k_(k), orbits_(ClassificationTable::get(k).orbit_count()),
      counts_(orbits_ * orbits_, 0), dissolved_(orbits_, 0) {}

std::uint64_t OrbitTransitionMatrix::total_counts() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t OrbitTransitionMatrix::total_dissolved() const {
  return std::accumulate(dissolved_.begin(), dissolved_.end(), std::uint64_t{0});
}

OrbitTransitionMatrix& OrbitTransitionMatrix::operator+=(const OrbitTransitionMatrix& other) {
  if (other.k_ != k_) throw InvalidArgument("transition matrices built for different k");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  for (std::size_t i = 0; i < dissolved_.size(); ++i) dissolved_[i] += other.dissolved_[i];
  pairs_ += other.pairs_;
  return *this;
}

namespace {

void check_universe(const StaticGraph& from, const StaticGraph& to) {
  if (from.node_count() != to.node_count())
    throw InvalidArgument("snapshots have different node universes (" +
                          std::to_string(from.node_count()) + " vs " +
                          std::to_string(to.node_count()) + ")");
}

void check_series(const SnapshotSeries& series) {
  if (series.size() < 2)
    throw InvalidArgument("transitions need at least 2 snapshots, got " +
                          std::to_string(series.size()));
}

}  // namespace

OrbitTransitionMatrix enumerate_transitions(const StaticGraph& from, const StaticGraph& to, int k) {
  check_universe(from, to);
  const auto& table = ClassificationTable::get(k);
  OrbitTransitionMatrix total(k);
  const auto n = static_cast<std::int64_t>(from.node_count());
#pragma omp parallel
  {
    OrbitTransitionMatrix local(k);
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t root = 0; root < n; ++root)
      internal::transitions_root(from, to, table, static_cast<NodeIndex>(root), local);
#pragma omp critical(orbitflow_transition_merge)
    total += local;
  }
  total.set_pairs_processed(1);
  return total;
}

OrbitTransitionMatrix accumulate_series(const SnapshotSeries& series, int k) {
  check_series(series);
  OrbitTransitionMatrix total(k);
  for (std::size_t i = 0; i + 1 < series.size(); ++i)
    total += enumerate_transitions(series.snapshots[i], series.snapshots[i + 1], k);
  return total;
}

NormalizedTransitionMatrix row_normalize(const OrbitTransitionMatrix& t) {
  const std::size_t m = t.orbit_count();
  NormalizedTransitionMatrix out(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::uint64_t row_sum = 0;
    for (std::size_t b = 0; b < m; ++b) row_sum += t.at(a, b);
    if (row_sum == 0) continue;
    for (std::size_t b = 0; b < m; ++b)
      out(a, b) = static_cast<double>(t.at(a, b)) / static_cast<double>(row_sum);
  }
  return out;
}

TransitionBand classify_transition(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw InvalidArgument("transition value " + std::to_string(value) + " outside [0, 1]");
  if (value <= 1.0 / 3.0) return TransitionBand::Rare;
  if (value <= 2.0 / 3.0) return TransitionBand::Common;
  return TransitionBand::Frequent;
}

TransitionFingerprint discretize(const SquareMatrix& values) {
  TransitionFingerprint out;
  out.size = values.size();
  out.bands.reserve(values.values().size());
  for (double v : values.values()) out.bands.push_back(classify_transition(v));
  return out;
}

const char* band_name(TransitionBand band) {
  switch (band) {
    case TransitionBand::Rare: return "rare";
    case TransitionBand::Common: return "common";
    case TransitionBand::Frequent: return "frequent";
  }
  return "?";
}

}  // namespace orbitflow
