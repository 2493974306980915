#include <random>
#include <unordered_set>

#include "orbitflow/census.hpp"
#include "orbitflow/error.hpp"
#include "orbitflow/nullmodel.hpp"

namespace orbitflow {

void RandomizationConfig::validate() const {
  if (replicates < 1) throw InvalidArgument("replicates must be at least 1");
  if (swaps_per_edge < 1) throw InvalidArgument("swaps per edge must be at least 1");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t edge_key(NodeIndex u, NodeIndex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

std::uint64_t replicate_seed(std::uint64_t seed, std::size_t replicate) {
  return splitmix64(splitmix64(seed) ^ splitmix64(0xd1b54a32d192ed03ULL + replicate));
}

StaticGraph degree_preserving_randomize(const StaticGraph& g, std::uint64_t seed,
                                        std::size_t swaps_per_edge, SwapStats* stats) {
  std::vector<Edge> edges = g.edges();
  SwapStats local;
  if (edges.size() >= 2) {
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) present.insert(edge_key(u, v));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    std::bernoulli_distribution flip(0.5);
    local.attempted = swaps_per_edge * edges.size();
    for (std::size_t attempt = 0; attempt < local.attempted; ++attempt) {
      const std::size_t i = pick(rng);
      const std::size_t j = pick(rng);
      if (i == j) continue;
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (flip(rng)) std::swap(c, d);
      // (a,b),(c,d) -> (a,d),(c,b)
      if (a == d || c == b) continue;
      if (present.count(edge_key(a, d)) || present.count(edge_key(c, b))) continue;
      present.erase(edge_key(a, b));
      present.erase(edge_key(c, d));
      present.insert(edge_key(a, d));
      present.insert(edge_key(c, b));
      edges[i] = {a, d};
      edges[j] = {c, b};
      ++local.accepted;
    }
  }
  if (stats) *stats = local;
  return StaticGraph(g.node_count(), edges);
}

EnsembleFrequencies ensemble_frequencies(const StaticGraph& g, const RandomizationConfig& cfg, int k) {
  cfg.validate();
  check_graphlet_size(k);
  EnsembleFrequencies out;
  out.per_replicate.resize(cfg.replicates);
  const auto replicates = static_cast<std::int64_t>(cfg.replicates);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < replicates; ++r) {
    const auto replica = degree_preserving_randomize(
        g, replicate_seed(cfg.seed, static_cast<std::size_t>(r)), cfg.swaps_per_edge);
    out.per_replicate[r] = serial::run_census(replica, k).graphlets;
  }
  out.mean.assign(ClassificationTable::get(k).graphlet_count(), 0.0);
  for (const auto& counts : out.per_replicate)
    for (std::size_t c = 0; c < counts.size(); ++c) out.mean[c] += static_cast<double>(counts[c]);
  for (auto& m : out.mean) m /= static_cast<double>(cfg.replicates);
  return out;
}

}  // namespace orbitflow
