#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitflow/agreement.hpp"
#include "orbitflow/cluster.hpp"
#include "orbitflow/graph_metrics.hpp"
#include "orbitflow/nullmodel.hpp"
#include "orbitflow/temporal.hpp"

namespace orbitflow {

struct NetworkSpec {
  std::string name;
  std::string path_text;            // as written in the manifest
  std::filesystem::path input;      // resolved against the manifest directory
  ParseOptions parse;
  std::optional<SnapshotPolicy> policy;  // absent: final aggregate graph only
};

struct RunSettings {
  int k = 4;
  SimilarityKind metric = SimilarityKind::OTA;
  AgreementConfig agreement;
  RandomizationConfig randomization;
  Linkage linkage = Linkage::Average;
  ClusteringMode clustering = ClusteringMode::AverageLocal;
  std::size_t clusters = 0;  // 0: no flat assignment
};

// A run description. Text form (INI):
//
//   [settings]
//   k = 4
//   ; ota | gda | motif
//   metric = ota
//   seed = 7
//
//   [network enron]
//   path = data/enron.txt
//   ; active | aggregate
//   policy = active
//   width = 30
//   count = 12
//
// Relative paths are resolved against the manifest's directory. A network
// without width/count is only usable where the final aggregate graph is
// enough (census final bundle, motifs, gda).
struct RunManifest {
  std::vector<NetworkSpec> networks;
  RunSettings settings;

  // Unique names, at least one network, existing input files, valid settings.
  void validate() const;
};

RunManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir);
RunManifest load_manifest(const std::filesystem::path& path);

// Enum <-> text used by both the manifest and the CLI.
SnapshotMode parse_snapshot_mode(std::string_view text);
Separator parse_separator(std::string_view text);
SimilarityKind parse_metric(std::string_view text);
OtaScaling parse_ota_scaling(std::string_view text);
GddScaling parse_gdd_scaling(std::string_view text);
Linkage parse_linkage(std::string_view text);
ClusteringMode parse_clustering_mode(std::string_view text);
const char* snapshot_mode_name(SnapshotMode mode);
const char* separator_name(Separator sep);
const char* ota_scaling_name(OtaScaling scaling);
const char* gdd_scaling_name(GddScaling scaling);
const char* clustering_mode_name(ClusteringMode mode);

}  // namespace orbitflow
