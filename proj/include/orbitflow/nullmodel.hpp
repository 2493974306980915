#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitflow/graph.hpp"

namespace orbitflow {

struct RandomizationConfig {
  std::size_t replicates = 100;
  std::size_t swaps_per_edge = 10;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SwapStats {
  std::size_t attempted = 0;
  std::size_t accepted = 0;
};

// swaps_per_edge * |E| attempted double-edge swaps (a,b),(c,d) -> (a,d),(c,b).
// Swaps creating a self-loop or a duplicate edge are rejected, so the degree
// sequence and simplicity are preserved.
StaticGraph degree_preserving_randomize(const StaticGraph& g, std::uint64_t seed,
                                        std::size_t swaps_per_edge = 10,
                                        SwapStats* stats = nullptr);

// Seed of replicate r, a pure function of (seed, r).
std::uint64_t replicate_seed(std::uint64_t seed, std::size_t replicate);

struct EnsembleFrequencies {
  std::vector<double> mean;                               // per graphlet class
  std::vector<std::vector<std::uint64_t>> per_replicate;  // [replicate][class]
};

// Census of every replicate (in parallel over replicates); the mean is
// summed in replicate order.
EnsembleFrequencies ensemble_frequencies(const StaticGraph& g, const RandomizationConfig& cfg,
                                         int k = 4);

}  // namespace orbitflow
