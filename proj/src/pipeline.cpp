#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "orbitflow/cluster.hpp"
#include "orbitflow/error.hpp"
#include "orbitflow/gdd.hpp"
#include "orbitflow/graph_metrics.hpp"
#include "orbitflow/io.hpp"
#include "orbitflow/nullmodel.hpp"
#include "orbitflow/pipeline.hpp"

namespace orbitflow::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write(RunReport& report, const fs::path& path, std::string_view content) {
  io::write_file_atomic(path, content);
  report.written.push_back(path);
}

// Runs fn for every network; a throwing network is recorded and skipped.
template <class Fn>
void for_each_network(const RunManifest& manifest, RunReport& report, Fn fn) {
  for (const auto& spec : manifest.networks) {
    try {
      fn(spec);
    } catch (const std::exception& e) {
      report.failures.push_back(spec.name + ": " + e.what());
    }
  }
}

const SnapshotSeries& require_series(const NetworkSpec& spec, const LoadedNetwork& net) {
  if (!net.series)
    throw InvalidArgument("network '" + spec.name + "' has no snapshot policy (set width and count)");
  return *net.series;
}

std::string metric_or_nan(const StaticGraph& g, double (*fn)(const StaticGraph&)) {
  if (g.edge_count() == 0) return "nan";
  return io::format_number(fn(g));
}

double cpl(const StaticGraph& g) { return characteristic_path_length(g); }
double avg_degree(const StaticGraph& g) { return average_degree(g); }

json settings_json(const RunSettings& s) {
  return {
      {"k", s.k},
      {"metric", kind_name(s.metric)},
      {"ota_scaling", ota_scaling_name(s.agreement.ota_scaling)},
      {"relative_rescale", s.agreement.use_relative_rescale},
      {"gdd_scaling", gdd_scaling_name(s.agreement.gdd_scaling)},
      {"include_k3_orbits", s.agreement.include_k3_orbits},
      {"replicates", s.randomization.replicates},
      {"swaps_per_edge", s.randomization.swaps_per_edge},
      {"seed", s.randomization.seed},
      {"linkage", linkage_name(s.linkage)},
      {"clustering", clustering_mode_name(s.clustering)},
      {"clusters", s.clusters},
  };
}

json networks_json(const RunManifest& manifest) {
  json out = json::array();
  for (const auto& n : manifest.networks) {
    json entry = {{"name", n.name}, {"path", n.path_text}, {"sep", separator_name(n.parse.separator)}};
    if (n.policy) {
      entry["policy"] = snapshot_mode_name(n.policy->mode);
      entry["width"] = n.policy->width;
      entry["count"] = n.policy->count;
      entry["origin"] = n.policy->origin_override ? json(*n.policy->origin_override) : json(nullptr);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

void write_census_bundle(RunReport& report, const fs::path& dir, const StaticGraph& g, int k,
                         const std::vector<std::string>& labels, GddScaling scaling) {
  const auto census = run_census(g, k);
  write(report, dir / "orbits.csv", io::orbit_frequencies_csv(census.orbits, labels));
  write(report, dir / "classes.csv", io::class_frequencies_csv(k, census.graphlets));
  write(report, dir / "gdd.csv", io::gdd_csv(compute_gdd(census.orbits, scaling)));
}

}  // namespace

LoadedNetwork load_network(const NetworkSpec& spec) {
  LoadedNetwork net;
  try {
    net.edges = read_edge_list_file(spec.input.string(), spec.parse);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), spec.input.string() + ": " + e.what());
  }
  if (spec.policy) net.series = build_snapshots(net.edges, *spec.policy);
  return net;
}

RunReport cmd_stats(const RunManifest& manifest, const fs::path& out) {
  manifest.validate();
  RunReport report;
  std::ostringstream combined;
  combined << "network,snapshot,nodes,edges,avg_degree,clustering,cpl,relative_size\n";
  for_each_network(manifest, report, [&](const NetworkSpec& spec) {
    const auto net = load_network(spec);
    const auto& series = require_series(spec, net);
    const auto relative = relative_size_series(series);
    std::ostringstream csv;
    csv << "snapshot,nodes,edges,avg_degree,clustering,cpl\n";
    std::ostringstream rows;
    for (std::size_t i = 0; i < series.size(); ++i) {
      const auto& g = series.snapshots[i];
      std::ostringstream row;
      row << i << ',' << g.present_node_count() << ',' << g.edge_count() << ','
          << metric_or_nan(g, avg_degree) << ','
          << io::format_number(clustering_coefficient(g, manifest.settings.clustering)) << ','
          << metric_or_nan(g, cpl);
      csv << row.str() << '\n';
      rows << spec.name << ',' << row.str() << ',' << io::format_number(relative[i]) << '\n';
    }
    write(report, out / "stats" / (spec.name + ".csv"), csv.str());
    combined << rows.str();
  });
  write(report, out / "stats" / "combined.csv", combined.str());
  return report;
}

RunReport cmd_census(const RunManifest& manifest, const fs::path& out) {
  manifest.validate();
  RunReport report;
  const int k = manifest.settings.k;
  const auto scaling = manifest.settings.agreement.gdd_scaling;
  for_each_network(manifest, report, [&](const NetworkSpec& spec) {
    const auto net = load_network(spec);
    const auto& labels = net.edges.labels.all();
    const fs::path root = out / "census" / spec.name;
    if (net.series)
      for (std::size_t i = 0; i < net.series->size(); ++i)
        write_census_bundle(report, root / ("snapshot_" + std::to_string(i)), net.series->snapshots[i],
                            k, labels, scaling);
    write_census_bundle(report, root / "final", aggregate_graph(net.edges), k, labels, scaling);
  });
  return report;
}

OrbitTransitionMatrix network_transitions(const LoadedNetwork& net, int k) {
  if (!net.series) throw InvalidArgument("transitions need a snapshot policy (set width and count)");
  return accumulate_series(*net.series, k);
}

RunReport cmd_transitions(const RunManifest& manifest, const fs::path& out) {
  manifest.validate();
  RunReport report;
  for_each_network(manifest, report, [&](const NetworkSpec& spec) {
    const auto net = load_network(spec);
    require_series(spec, net);
    const auto t = network_transitions(net, manifest.settings.k);
    const auto normalized = row_normalize(t);
    const fs::path dir = out / "transitions" / spec.name;
    write(report, dir / "counts.csv", io::transition_counts_csv(t));
    write(report, dir / "normalized.csv", io::square_matrix_csv(normalized));
    write(report, dir / "fingerprint.csv", io::fingerprint_csv(discretize(normalized)));
    write(report, dir / "transitions.json", io::transitions_json(spec.name, t));
  });
  return report;
}

RunReport cmd_motifs(const RunManifest& manifest, const fs::path& out) {
  manifest.validate();
  RunReport report;
  const int k = manifest.settings.k;
  const auto& cfg = manifest.settings.randomization;
  const auto& table = ClassificationTable::get(k);
  for_each_network(manifest, report, [&](const NetworkSpec& spec) {
    const auto net = load_network(spec);
    const auto g = aggregate_graph(net.edges);
    const auto real = graphlet_class_frequencies(g, k);
    const auto ensemble = ensemble_frequencies(g, cfg, k);
    const std::vector<double> real_d(real.begin(), real.end());
    const auto fingerprint = motif_scores(real_d, ensemble.mean);

    std::ostringstream csv;
    csv << "class,name,real,ensemble_mean,delta_raw,delta\n";
    json classes = json::array();
    for (std::size_t c = 0; c < real.size(); ++c) {
      csv << c + 1 << ',' << table.graphlet(c).name << ',' << real[c] << ','
          << io::format_number(ensemble.mean[c]) << ',' << io::format_number(fingerprint.raw[c]) << ','
          << io::format_number(fingerprint.normalized[c]) << '\n';
      classes.push_back({{"class", c + 1},
                         {"name", table.graphlet(c).name},
                         {"real", real[c]},
                         {"ensemble_mean", ensemble.mean[c]},
                         {"delta_raw", fingerprint.raw[c]},
                         {"delta", fingerprint.normalized[c]}});
    }
    json doc = {{"network", spec.name},
                {"k", k},
                {"replicates", cfg.replicates},
                {"swaps_per_edge", cfg.swaps_per_edge},
                {"seed", cfg.seed},
                {"classes", classes}};
    write(report, out / "motifs" / (spec.name + ".csv"), csv.str());
    write(report, out / "motifs" / (spec.name + ".json"), doc.dump(2) + "\n");
  });
  return report;
}

GraphletDegreeDistribution network_gdd(const LoadedNetwork& net, const AgreementConfig& cfg) {
  const auto g = aggregate_graph(net.edges);
  auto gdd = compute_gdd(compute_orbit_frequencies(g, 4), cfg.gdd_scaling);
  if (cfg.include_k3_orbits)
    gdd = concat_gdd(compute_gdd(compute_orbit_frequencies(g, 3), cfg.gdd_scaling), gdd);
  return gdd;
}

namespace {

MotifFingerprint read_motif_fingerprint(const fs::path& out, const std::string& name) {
  const auto path = out / "motifs" / (name + ".json");
  std::ifstream in(path);
  if (!in)
    throw Error("no motif scores at '" + path.string() +
                "'; run the `motifs` subcommand with the same --out first");
  const auto doc = json::parse(in);
  MotifFingerprint f;
  for (const auto& c : doc.at("classes")) {
    f.raw.push_back(c.at("delta_raw").get<double>());
    f.normalized.push_back(c.at("delta").get<double>());
  }
  return f;
}

}  // namespace

SimilarityMatrix compare_networks(const RunManifest& manifest, const fs::path& out, RunReport& report) {
  const auto& settings = manifest.settings;
  std::vector<std::string> names;
  switch (settings.metric) {
    case SimilarityKind::OTA: {
      std::vector<OrbitTransitionMatrix> matrices;
      for_each_network(manifest, report, [&](const NetworkSpec& spec) {
        const auto net = load_network(spec);
        require_series(spec, net);
        matrices.push_back(network_transitions(net, settings.k));
        names.push_back(spec.name);
      });
      return ota_matrix(names, matrices, settings.agreement);
    }
    case SimilarityKind::GDA: {
      std::vector<GraphletDegreeDistribution> gdds;
      for_each_network(manifest, report, [&](const NetworkSpec& spec) {
        gdds.push_back(network_gdd(load_network(spec), settings.agreement));
        names.push_back(spec.name);
      });
      return gda_matrix(names, gdds);
    }
    case SimilarityKind::MotifDistance: {
      std::vector<MotifFingerprint> prints;
      for_each_network(manifest, report, [&](const NetworkSpec& spec) {
        prints.push_back(read_motif_fingerprint(out, spec.name));
        names.push_back(spec.name);
      });
      return motif_distance_matrix(names, prints);
    }
  }
  throw InvalidArgument("unknown metric");
}

RunReport cmd_compare(const RunManifest& manifest, const fs::path& out) {
  manifest.validate();
  RunReport report;
  const auto& settings = manifest.settings;
  const std::string metric = kind_name(settings.metric);
  SimilarityMatrix sim;
  try {
    sim = compare_networks(manifest, out, report);
  } catch (const Error& e) {
    report.failures.push_back(std::string("compare: ") + e.what());
    return report;
  }
  const auto tree = hierarchical_cluster(sim, settings.linkage);
  write(report, out / "compare" / (metric + "_similarity.csv"), io::similarity_csv(sim));
  write(report, out / "compare" / (metric + "_tree.json"), io::merge_tree_json(tree, settings.linkage));
  json meta = {{"tool", "orbitflow"},
               {"version", kToolVersion},
               {"command", "compare"},
               {"settings", settings_json(settings)},
               {"networks", networks_json(manifest)},
               {"compared", sim.names}};
  write(report, out / "compare" / (metric + "_run.json"), meta.dump(2) + "\n");
  return report;
}

RunReport cmd_cluster(const RunManifest& manifest, const fs::path& out, const fs::path& matrix) {
  const auto& settings = manifest.settings;
  const std::string metric = kind_name(settings.metric);
  const fs::path source = matrix.empty() ? out / "compare" / (metric + "_similarity.csv") : matrix;
  RunReport report;
  std::ifstream in(source);
  if (!in) {
    report.failures.push_back("cluster: no similarity matrix at '" + source.string() +
                              "'; run the `compare` subcommand first or pass --matrix");
    return report;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto sim = io::parse_similarity_csv(buffer.str(), settings.metric);
  const auto tree = hierarchical_cluster(sim, settings.linkage);
  write(report, out / "cluster" / (metric + "_tree.json"), io::merge_tree_json(tree, settings.linkage));
  if (settings.clusters > 0) {
    const auto labels = cut_tree(tree, settings.clusters);
    std::ostringstream csv;
    csv << "network,cluster\n";
    for (std::size_t i = 0; i < labels.size(); ++i) csv << tree.leaves[i] << ',' << labels[i] + 1 << '\n';
    write(report, out / "cluster" / (metric + "_assignments.csv"), csv.str());
  }
  return report;
}

}  // namespace orbitflow::pipeline
