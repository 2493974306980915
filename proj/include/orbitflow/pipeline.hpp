#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "orbitflow/agreement.hpp"
#include "orbitflow/census.hpp"
#include "orbitflow/manifest.hpp"
#include "orbitflow/transitions.hpp"

// End-to-end commands behind the CLI. Every command processes the networks
// of a manifest in order, isolates per-network failures and writes its
// outputs atomically below `out`.
namespace orbitflow::pipeline {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunReport {
  std::vector<std::string> failures;  // "network: message"
  std::vector<std::filesystem::path> written;
  bool ok() const noexcept { return failures.empty(); }
};

struct LoadedNetwork {
  TemporalEdgeList edges;
  std::optional<SnapshotSeries> series;
};

LoadedNetwork load_network(const NetworkSpec& spec);

// stats/<name>.csv (snapshot,nodes,edges,avg_degree,clustering,cpl) and
// stats/combined.csv.
RunReport cmd_stats(const RunManifest& manifest, const std::filesystem::path& out);

// census/<name>/snapshot_<i>/ and census/<name>/final/, each holding
// orbits.csv, classes.csv and gdd.csv.
RunReport cmd_census(const RunManifest& manifest, const std::filesystem::path& out);

// transitions/<name>/{counts,normalized,fingerprint}.csv + transitions.json.
RunReport cmd_transitions(const RunManifest& manifest, const std::filesystem::path& out);

// motifs/<name>.csv and motifs/<name>.json, on the final aggregate graph.
RunReport cmd_motifs(const RunManifest& manifest, const std::filesystem::path& out);

// compare/<metric>_similarity.csv, <metric>_tree.json, <metric>_run.json.
// The motif metric reads the motifs/ outputs of an earlier `motifs` run.
RunReport cmd_compare(const RunManifest& manifest, const std::filesystem::path& out);

// Clusters an existing similarity CSV (default: compare/<metric>_similarity.csv)
// into cluster/<metric>_tree.json and, with settings.clusters > 0,
// cluster/<metric>_assignments.csv.
RunReport cmd_cluster(const RunManifest& manifest, const std::filesystem::path& out,
                      const std::filesystem::path& matrix = {});

// Library-level computations the commands are built from.
OrbitTransitionMatrix network_transitions(const LoadedNetwork& net, int k);
GraphletDegreeDistribution network_gdd(const LoadedNetwork& net, const AgreementConfig& cfg);
SimilarityMatrix compare_networks(const RunManifest& manifest, const std::filesystem::path& out,
                                  RunReport& report);

}  // namespace orbitflow::pipeline
