#pragma once

#include <span>
#include <string>
#include <vector>

#include "orbitflow/gdd.hpp"
#include "orbitflow/graph.hpp"
#include "orbitflow/matrix.hpp"
#include "orbitflow/transitions.hpp"

namespace orbitflow {

enum class OtaScaling {
  Normalized,  // 1/|O|^2 prefactor, result in [0, 1]
  Raw,  // 1/|O| prefactor; identical inputs score |O|
};

struct AgreementConfig {
  OtaScaling ota_scaling = OtaScaling::Normalized;
  bool use_relative_rescale = true;
  GddScaling gdd_scaling = GddScaling::InverseK;
  bool include_k3_orbits = false;  // GDA over 3 + 11 orbits instead of 11
};

enum class SimilarityKind { OTA, GDA, MotifDistance };

const char* kind_name(SimilarityKind kind);
bool is_agreement(SimilarityKind kind);

struct SimilarityMatrix {
  std::vector<std::string> names;
  SquareMatrix values;
  SimilarityKind kind = SimilarityKind::OTA;
};

// Graphlet degree distribution agreement: mean over orbits of
// 1 - sqrt(sum_k (nG(k) - nH(k))^2) / sqrt(2). An orbit absent from both
// scores 1. Throws InvalidArgument when the orbit sets differ.
double gda_pair(const GraphletDegreeDistribution& g, const GraphletDegreeDistribution& h);

// Per-cell min-max rescaling across the set. Cells that are constant
// across the set become 0. Needs at least two matrices of equal size.
std::vector<SquareMatrix> relative_rescale(std::span<const SquareMatrix> matrices);

double ota_pair(const SquareMatrix& a, const SquareMatrix& b,
                OtaScaling scaling = OtaScaling::Normalized);

// Row-normalize, optionally rescale across the set, then all-pairs OTA.
SimilarityMatrix ota_matrix(const std::vector<std::string>& names,
                            std::span<const OrbitTransitionMatrix> networks,
                            const AgreementConfig& cfg = {});

SimilarityMatrix gda_matrix(const std::vector<std::string>& names,
                            std::span<const GraphletDegreeDistribution> networks);

struct MotifFingerprint {
  std::vector<double> raw;         // Delta_i in [-1, 1]
  std::vector<double> normalized;  // raw / ||raw|| (all zero when raw is)
};

// Delta_i = (real - mean) / (real + mean), 0/0 -> 0, then unit-normalized.
MotifFingerprint motif_scores(std::span<const double> real_counts,
                              std::span<const double> ensemble_means);
MotifFingerprint motif_scores(const StaticGraph& real, std::span<const double> ensemble_means,
                              int k = 4);

// Euclidean distance between the normalized vectors.
double fingerprint_distance(const MotifFingerprint& a, const MotifFingerprint& b);

SimilarityMatrix motif_distance_matrix(const std::vector<std::string>& names,
                                       std::span<const MotifFingerprint> networks);

}  // namespace orbitflow
