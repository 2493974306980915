#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "orbitflow/agreement.hpp"
#include "orbitflow/error.hpp"

namespace orbitflow {

const char* kind_name(SimilarityKind kind) {
  switch (kind) {
    case SimilarityKind::OTA: return "ota";
    case SimilarityKind::GDA: return "gda";
    case SimilarityKind::MotifDistance: return "motif";
  }
  return "?";
}

bool is_agreement(SimilarityKind kind) { return kind != SimilarityKind::MotifDistance; }

namespace {

double orbit_agreement(const OrbitDistribution& g, const OrbitDistribution& h) {
  if (!g.touched() && !h.touched()) return 1.0;
  double sum = 0.0;
  auto gi = g.normalized.begin();
  auto hi = h.normalized.begin();
  // merge walk over the union of degree keys
  while (gi != g.normalized.end() || hi != h.normalized.end()) {
    double diff;
    if (hi == h.normalized.end() || (gi != g.normalized.end() && gi->first < hi->first)) {
      diff = gi->second;
      ++gi;
    } else if (gi == g.normalized.end() || hi->first < gi->first) {
      diff = hi->second;
      ++hi;
    } else {
      diff = gi->second - hi->second;
      ++gi;
      ++hi;
    }
    sum += diff * diff;
  }
  return 1.0 - std::sqrt(sum) / std::sqrt(2.0);
}

// Fills sim.values from a symmetric pair function, parallel over pairs.
template <class PairFn>
void fill_pairs(SimilarityMatrix& sim, double diagonal, PairFn pair) {
  const std::size_t n = sim.names.size();
  sim.values = SquareMatrix(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    sim.values(i, i) = diagonal;
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < count; ++p) {
    const auto [i, j] = pairs[p];
    const double value = pair(i, j);
    sim.values(i, j) = value;
    sim.values(j, i) = value;
  }
}

void check_names(const std::vector<std::string>& names, std::size_t count) {
  if (names.size() != count)
    throw InvalidArgument("got " + std::to_string(names.size()) + " names for " +
                          std::to_string(count) + " networks");
}

}  // namespace

double gda_pair(const GraphletDegreeDistribution& g, const GraphletDegreeDistribution& h) {
  if (g.orbit_ids != h.orbit_ids)
    throw InvalidArgument("graphlet degree distributions use different orbit sets");
  if (g.orbits.empty()) throw InvalidArgument("graphlet degree distribution has no orbits");
  double sum = 0.0;
  for (std::size_t j = 0; j < g.orbits.size(); ++j) sum += orbit_agreement(g.orbits[j], h.orbits[j]);
  return sum / static_cast<double>(g.orbits.size());
}

std::vector<SquareMatrix> relative_rescale(std::span<const SquareMatrix> matrices) {
  if (matrices.size() < 2) throw InvalidArgument("relative rescaling needs at least 2 networks");
  const std::size_t n = matrices.front().size();
  for (const auto& m : matrices)
    if (m.size() != n) throw InvalidArgument("matrices differ in size");
  std::vector<SquareMatrix> out(matrices.begin(), matrices.end());
  for (std::size_t cell = 0; cell < n * n; ++cell) {
    double lo = matrices.front().values()[cell];
    double hi = lo;
    for (const auto& m : matrices) {
      lo = std::min(lo, m.values()[cell]);
      hi = std::max(hi, m.values()[cell]);
    }
    for (auto& m : out) {
      double& v = m.values()[cell];
      v = hi == lo ? 0.0 : (v - lo) / (hi - lo);
    }
  }
  return out;
}

double ota_pair(const SquareMatrix& a, const SquareMatrix& b, OtaScaling scaling) {
  if (a.size() != b.size() || a.size() == 0) throw InvalidArgument("OTA operands differ in size");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    sum += 1.0 - std::abs(a.values()[i] - b.values()[i]);
  const double orbits = static_cast<double>(a.size());
  return scaling == OtaScaling::Normalized ? sum / (orbits * orbits) : sum / orbits;
}

SimilarityMatrix ota_matrix(const std::vector<std::string>& names,
                            std::span<const OrbitTransitionMatrix> networks,
                            const AgreementConfig& cfg) {
  if (networks.size() < 2) throw InvalidArgument("OTA comparison needs at least 2 networks");
  check_names(names, networks.size());
  std::vector<SquareMatrix> normalized;
  normalized.reserve(networks.size());
  for (const auto& t : networks) normalized.push_back(row_normalize(t));
  if (cfg.use_relative_rescale) normalized = relative_rescale(normalized);

  SimilarityMatrix sim;
  sim.names = names;
  sim.kind = SimilarityKind::OTA;
  const double self = ota_pair(normalized.front(), normalized.front(), cfg.ota_scaling);
  fill_pairs(sim, self, [&](std::size_t i, std::size_t j) {
    return ota_pair(normalized[i], normalized[j], cfg.ota_scaling);
  });
  return sim;
}

SimilarityMatrix gda_matrix(const std::vector<std::string>& names,
                            std::span<const GraphletDegreeDistribution> networks) {
  if (networks.size() < 2) throw InvalidArgument("GDA comparison needs at least 2 networks");
  check_names(names, networks.size());
  SimilarityMatrix sim;
  sim.names = names;
  sim.kind = SimilarityKind::GDA;
  fill_pairs(sim, 1.0, [&](std::size_t i, std::size_t j) { return gda_pair(networks[i], networks[j]); });
  return sim;
}

MotifFingerprint motif_scores(std::span<const double> real_counts,
                              std::span<const double> ensemble_means) {
  if (real_counts.size() != ensemble_means.size())
    throw InvalidArgument("real and ensemble frequencies cover different classes");
  MotifFingerprint f;
  f.raw.reserve(real_counts.size());
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < real_counts.size(); ++i) {
    const double denom = real_counts[i] + ensemble_means[i];
    const double delta = denom == 0.0 ? 0.0 : (real_counts[i] - ensemble_means[i]) / denom;
    f.raw.push_back(delta);
    norm_sq += delta * delta;
  }
  f.normalized = f.raw;
  if (norm_sq > 0.0) {
    const double norm = std::sqrt(norm_sq);
    for (auto& d : f.normalized) d /= norm;
  }
  return f;
}

MotifFingerprint motif_scores(const StaticGraph& real, std::span<const double> ensemble_means, int k) {
  const auto counts = graphlet_class_frequencies(real, k);
  std::vector<double> real_counts(counts.begin(), counts.end());
  return motif_scores(real_counts, ensemble_means);
}

double fingerprint_distance(const MotifFingerprint& a, const MotifFingerprint& b) {
  if (a.normalized.size() != b.normalized.size())
    throw InvalidArgument("motif fingerprints cover different classes");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.normalized.size(); ++i) {
    const double d = a.normalized[i] - b.normalized[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

SimilarityMatrix motif_distance_matrix(const std::vector<std::string>& names,
                                       std::span<const MotifFingerprint> networks) {
  if (networks.size() < 2) throw InvalidArgument("motif comparison needs at least 2 networks");
  check_names(names, networks.size());
  SimilarityMatrix sim;
  sim.names = names;
  sim.kind = SimilarityKind::MotifDistance;
  fill_pairs(sim, 0.0, [&](std::size_t i, std::size_t j) {
    return fingerprint_distance(networks[i], networks[j]);
  });
  return sim;
}

}  // namespace orbitflow
