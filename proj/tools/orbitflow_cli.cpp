// orbitflow: temporal network graphlet-orbit census, transitions and comparison.

#include <omp.h>

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "orbitflow/error.hpp"
#include "orbitflow/manifest.hpp"
#include "orbitflow/pipeline.hpp"

namespace {

struct Options {
  std::string manifest;
  std::string out = "orbitflow_out";
  int threads = 0;
  std::optional<std::uint64_t> seed;

  // single-network mode
  std::string input;
  std::string name = "network";
  std::string sep = "ws";
  std::string policy = "active";
  std::optional<std::int64_t> width;
  std::optional<std::size_t> count;
  std::optional<std::int64_t> origin;

  // settings overrides
  std::optional<int> k;
  std::optional<std::string> metric;
  std::optional<std::string> ota_scaling;
  bool no_relative_rescale = false;
  std::optional<std::string> gdd_scaling;
  bool include_k3 = false;
  std::optional<std::size_t> replicates;
  std::optional<std::size_t> swaps_per_edge;
  std::optional<std::string> linkage;
  std::optional<std::string> clustering;
  std::optional<std::size_t> clusters;
  std::string matrix;
};

orbitflow::RunManifest build_manifest(const Options& o, bool need_networks) {
  using namespace orbitflow;
  RunManifest manifest;
  if (!o.manifest.empty()) {
    manifest = load_manifest(o.manifest);
  } else if (!o.input.empty()) {
    NetworkSpec spec;
    spec.name = o.name;
    spec.path_text = o.input;
    spec.input = o.input;
    spec.parse.separator = parse_separator(o.sep);
    if (o.width || o.count) {
      if (!o.width || !o.count) throw InvalidArgument("--width and --count go together");
      SnapshotPolicy policy;
      policy.mode = parse_snapshot_mode(o.policy);
      policy.width = *o.width;
      policy.count = *o.count;
      policy.origin_override = o.origin;
      spec.policy = policy;
    }
    manifest.networks.push_back(spec);
  } else if (need_networks) {
    throw InvalidArgument("give --manifest PATH or --input PATH");
  }

  auto& s = manifest.settings;
  if (o.k) s.k = *o.k;
  if (o.metric) s.metric = parse_metric(*o.metric);
  if (o.ota_scaling) s.agreement.ota_scaling = parse_ota_scaling(*o.ota_scaling);
  if (o.no_relative_rescale) s.agreement.use_relative_rescale = false;
  if (o.gdd_scaling) s.agreement.gdd_scaling = parse_gdd_scaling(*o.gdd_scaling);
  if (o.include_k3) s.agreement.include_k3_orbits = true;
  if (o.replicates) s.randomization.replicates = *o.replicates;
  if (o.swaps_per_edge) s.randomization.swaps_per_edge = *o.swaps_per_edge;
  if (o.seed) s.randomization.seed = *o.seed;
  if (o.linkage) s.linkage = parse_linkage(*o.linkage);
  if (o.clustering) s.clustering = parse_clustering_mode(*o.clustering);
  if (o.clusters) s.clusters = *o.clusters;
  return manifest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphlet-orbit census, orbit transitions and agreement metrics for temporal networks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--manifest", o.manifest, "Run manifest (INI)")->check(CLI::ExistingFile);
  app.add_option("--out", o.out, "Output directory")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Randomization seed (overrides the manifest)");

  app.add_option("--input", o.input, "Single temporal edge list (instead of --manifest)")->check(CLI::ExistingFile);
  app.add_option("--name", o.name, "Network name for --input")->capture_default_str();
  app.add_option("--sep", o.sep, "Field separator")->check(CLI::IsMember({"ws", "comma"}))->capture_default_str();
  app.add_option("--policy", o.policy, "Snapshot policy")->check(CLI::IsMember({"active", "aggregate"}))->capture_default_str();
  app.add_option("--width", o.width, "Time units per snapshot");
  app.add_option("--count", o.count, "Number of snapshots");
  app.add_option("--origin", o.origin, "First snapshot start (default: earliest event)");

  app.add_option("--k", o.k, "Graphlet size (3 or 4)")->check(CLI::IsMember({3, 4}));
  app.add_option("--clustering", o.clustering, "Clustering coefficient form")
      ->check(CLI::IsMember({"local", "transitivity"}));

  auto* stats = app.add_subcommand("stats", "Per-snapshot size, degree, clustering and path length");
  auto* census = app.add_subcommand("census", "Orbit frequencies, class counts and GDD per snapshot");
  auto* transitions = app.add_subcommand("transitions", "Orbit-transition matrices and fingerprints");
  auto* motifs = app.add_subcommand("motifs", "Motif scores against degree-preserving random graphs");
  motifs->add_option("--replicates", o.replicates, "Random replicates");
  motifs->add_option("--swaps-per-edge", o.swaps_per_edge, "Attempted swaps per edge");
  auto* compare = app.add_subcommand("compare", "Similarity matrix and merge tree over a network set");
  auto* cluster = app.add_subcommand("cluster", "Hierarchical clustering of a similarity matrix");
  for (auto* sub : {compare, cluster}) {
    sub->add_option("--metric", o.metric, "Agreement metric")->check(CLI::IsMember({"ota", "gda", "motif"}));
    sub->add_option("--linkage", o.linkage, "Linkage")->check(CLI::IsMember({"average", "single", "complete"}));
  }
  compare->add_option("--ota-scaling", o.ota_scaling, "OTA prefactor")->check(CLI::IsMember({"raw", "normalized"}));
  compare->add_flag("--no-relative-rescale", o.no_relative_rescale, "Skip min-max rescaling across the set");
  compare->add_option("--gdd-scaling", o.gdd_scaling, "GDD normalization")->check(CLI::IsMember({"inverse_k", "plain"}));
  compare->add_flag("--include-k3", o.include_k3, "Add the 3-node orbits to GDA");
  cluster->add_option("--matrix", o.matrix, "Similarity CSV (default: output of compare)");
  cluster->add_option("--clusters", o.clusters, "Also write a flat assignment with this many clusters");

  CLI11_PARSE(app, argc, argv);

  if (o.threads > 0) omp_set_num_threads(o.threads);

  using namespace orbitflow;
  try {
    const bool is_cluster = cluster->parsed();
    const auto manifest = build_manifest(o, !is_cluster);
    pipeline::RunReport report;
    if (stats->parsed()) report = pipeline::cmd_stats(manifest, o.out);
    else if (census->parsed()) report = pipeline::cmd_census(manifest, o.out);
    else if (transitions->parsed()) report = pipeline::cmd_transitions(manifest, o.out);
    else if (motifs->parsed()) report = pipeline::cmd_motifs(manifest, o.out);
    else if (compare->parsed()) report = pipeline::cmd_compare(manifest, o.out);
    else report = pipeline::cmd_cluster(manifest, o.out, o.matrix);

    for (const auto& path : report.written) std::cout << path.string() << '\n';
    for (const auto& failure : report.failures) std::cerr << "error: " << failure << '\n';
    return report.ok() ? 0 : 1;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
