#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitflow/graph.hpp"
#include "orbitflow/matrix.hpp"
#include "orbitflow/temporal.hpp"

namespace orbitflow {

// |O| x |O| node-level orbit transition counts. A k-set connected in the
// source snapshot adds one count per member node: to counts(a, b) when it is
// still connected in the target snapshot, otherwise to dissolved(a).
class OrbitTransitionMatrix {
 public:
  OrbitTransitionMatrix() = default;
  explicit OrbitTransitionMatrix(int k);

  int k() const noexcept { return k_; }
  std::size_t orbit_count() const noexcept { return orbits_; }

  std::uint64_t& at(std::size_t from, std::size_t to) { return counts_[from * orbits_ + to]; }
  std::uint64_t at(std::size_t from, std::size_t to) const { return counts_[from * orbits_ + to]; }
  std::uint64_t& dissolved(std::size_t from) { return dissolved_[from]; }
  std::uint64_t dissolved(std::size_t from) const { return dissolved_[from]; }

  std::size_t pairs_processed() const noexcept { return pairs_; }
  void set_pairs_processed(std::size_t pairs) noexcept { pairs_ = pairs; }

  std::uint64_t total_counts() const;
  std::uint64_t total_dissolved() const;

  // Adds counts, dissolved and pairs_processed.
  OrbitTransitionMatrix& operator+=(const OrbitTransitionMatrix& other);
  friend bool operator==(const OrbitTransitionMatrix&, const OrbitTransitionMatrix&) = default;

 private:
  int k_ = 0;
  std::size_t orbits_ = 0;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> dissolved_;
  std::size_t pairs_ = 0;
};

// One snapshot pair. Sets that are connected only in `to` are not recorded.
// Throws InvalidArgument when the node universes differ.
OrbitTransitionMatrix enumerate_transitions(const StaticGraph& from, const StaticGraph& to,
                                            int k);

// Sum over consecutive pairs (S_i, S_i+1). Needs at least two snapshots.
OrbitTransitionMatrix accumulate_series(const SnapshotSeries& series, int k);

namespace serial {
OrbitTransitionMatrix enumerate_transitions(const StaticGraph& from, const StaticGraph& to,
                                            int k);
OrbitTransitionMatrix accumulate_series(const SnapshotSeries& series, int k);
}  // namespace serial

using NormalizedTransitionMatrix = SquareMatrix;

// Each row divided by its sum over target orbits; all-zero rows stay zero.
// Dissolved counts are not part of the denominator.
NormalizedTransitionMatrix row_normalize(const OrbitTransitionMatrix& t);

enum class TransitionBand { Rare, Common, Frequent };

// Rare: [0, 1/3], Common: (1/3, 2/3], Frequent: (2/3, 1].
TransitionBand classify_transition(double value);

struct TransitionFingerprint {
  std::size_t size = 0;
  std::vector<TransitionBand> bands;  // row-major
  TransitionBand operator()(std::size_t r, std::size_t c) const { return bands[r * size + c]; }
};

// Throws InvalidArgument for values outside [0, 1].
TransitionFingerprint discretize(const SquareMatrix& values);

const char* band_name(TransitionBand band);

}  // namespace orbitflow
