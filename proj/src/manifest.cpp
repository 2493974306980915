#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "orbitflow/error.hpp"
#include "orbitflow/manifest.hpp"

namespace orbitflow {

namespace pt = boost::property_tree;

namespace {

template <class Enum, std::size_t N>
Enum lookup(std::string_view text, const std::pair<std::string_view, Enum> (&options)[N],
            std::string_view what) {
  std::string valid;
  for (const auto& [name, value] : options) {
    if (name == text) return value;
    valid += (valid.empty() ? "" : ", ") + std::string(name);
  }
  throw InvalidArgument("unknown " + std::string(what) + " '" + std::string(text) +
                        "' (expected one of: " + valid + ")");
}

const std::pair<std::string_view, SnapshotMode> kModes[] = {
    {"active", SnapshotMode::ActiveEdge}, {"aggregate", SnapshotMode::Aggregate}};
const std::pair<std::string_view, Separator> kSeparators[] = {
    {"ws", Separator::Whitespace}, {"comma", Separator::Comma}};
const std::pair<std::string_view, SimilarityKind> kMetrics[] = {
    {"ota", SimilarityKind::OTA}, {"gda", SimilarityKind::GDA}, {"motif", SimilarityKind::MotifDistance}};
const std::pair<std::string_view, OtaScaling> kOtaScalings[] = {
    {"normalized", OtaScaling::Normalized}, {"raw", OtaScaling::Raw}};
const std::pair<std::string_view, GddScaling> kGddScalings[] = {
    {"inverse_k", GddScaling::InverseK}, {"plain", GddScaling::Plain}};
const std::pair<std::string_view, Linkage> kLinkages[] = {
    {"average", Linkage::Average}, {"single", Linkage::Single}, {"complete", Linkage::Complete}};
const std::pair<std::string_view, ClusteringMode> kClusteringModes[] = {
    {"local", ClusteringMode::AverageLocal}, {"transitivity", ClusteringMode::Transitivity}};

template <class Enum, std::size_t N>
const char* name_of(Enum value, const std::pair<std::string_view, Enum> (&options)[N]) {
  for (const auto& [name, v] : options)
    if (v == value) return name.data();
  return "?";
}

bool parse_bool(const std::string& text, const std::string& key) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw InvalidArgument("'" + key + "' must be true or false, got '" + text + "'");
}

template <class T>
T get_number(const pt::ptree& section, const std::string& key, T fallback) {
  const auto text = section.get_optional<std::string>(key);
  if (!text) return fallback;
  std::istringstream in(*text);
  in.imbue(std::locale::classic());
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof())
    throw InvalidArgument("'" + key + "' must be a number, got '" + *text + "'");
  if constexpr (std::is_unsigned_v<T>)
    if (text->find('-') != std::string::npos)
      throw InvalidArgument("'" + key + "' must not be negative");
  return value;
}

void check_keys(const pt::ptree& section, const std::string& where,
                const std::set<std::string>& allowed) {
  for (const auto& [key, child] : section)
    if (!allowed.count(key)) throw InvalidArgument("unknown key '" + key + "' in [" + where + "]");
}

RunSettings read_settings(const pt::ptree& s) {
  check_keys(s, "settings",
             {"k", "metric", "ota_scaling", "relative_rescale", "gdd_scaling", "include_k3_orbits",
              "replicates", "swaps_per_edge", "seed", "linkage", "clustering", "clusters"});
  RunSettings out;
  out.k = get_number<int>(s, "k", out.k);
  if (auto v = s.get_optional<std::string>("metric")) out.metric = parse_metric(*v);
  if (auto v = s.get_optional<std::string>("ota_scaling")) out.agreement.ota_scaling = parse_ota_scaling(*v);
  if (auto v = s.get_optional<std::string>("relative_rescale"))
    out.agreement.use_relative_rescale = parse_bool(*v, "relative_rescale");
  if (auto v = s.get_optional<std::string>("gdd_scaling")) out.agreement.gdd_scaling = parse_gdd_scaling(*v);
  if (auto v = s.get_optional<std::string>("include_k3_orbits"))
    out.agreement.include_k3_orbits = parse_bool(*v, "include_k3_orbits");
  out.randomization.replicates = get_number<std::size_t>(s, "replicates", out.randomization.replicates);
  out.randomization.swaps_per_edge =
      get_number<std::size_t>(s, "swaps_per_edge", out.randomization.swaps_per_edge);
  out.randomization.seed = get_number<std::uint64_t>(s, "seed", out.randomization.seed);
  if (auto v = s.get_optional<std::string>("linkage")) out.linkage = parse_linkage(*v);
  if (auto v = s.get_optional<std::string>("clustering")) out.clustering = parse_clustering_mode(*v);
  out.clusters = get_number<std::size_t>(s, "clusters", out.clusters);
  return out;
}

NetworkSpec read_network(const std::string& name, const pt::ptree& s,
                         const std::filesystem::path& base_dir) {
  check_keys(s, "network " + name, {"path", "policy", "width", "count", "origin", "sep"});
  NetworkSpec spec;
  spec.name = name;
  const auto path = s.get_optional<std::string>("path");
  if (!path) throw InvalidArgument("network '" + name + "' has no path");
  spec.path_text = *path;
  spec.input = std::filesystem::path(*path).is_absolute() ? std::filesystem::path(*path)
                                                          : base_dir / *path;
  if (auto v = s.get_optional<std::string>("sep")) spec.parse.separator = parse_separator(*v);
  const bool has_window = s.count("width") || s.count("count") || s.count("policy") || s.count("origin");
  if (has_window) {
    SnapshotPolicy policy;
    if (auto v = s.get_optional<std::string>("policy")) policy.mode = parse_snapshot_mode(*v);
    if (!s.count("width") || !s.count("count"))
      throw InvalidArgument("network '" + name + "' needs both width and count");
    policy.width = get_number<Timestamp>(s, "width", 0);
    policy.count = get_number<std::size_t>(s, "count", 0);
    if (s.count("origin")) policy.origin_override = get_number<Timestamp>(s, "origin", 0);
    policy.validate();
    spec.policy = policy;
  }
  return spec;
}

}  // namespace

SnapshotMode parse_snapshot_mode(std::string_view t) { return lookup(t, kModes, "snapshot policy"); }
Separator parse_separator(std::string_view t) { return lookup(t, kSeparators, "separator"); }
SimilarityKind parse_metric(std::string_view t) { return lookup(t, kMetrics, "metric"); }
OtaScaling parse_ota_scaling(std::string_view t) { return lookup(t, kOtaScalings, "OTA scaling"); }
GddScaling parse_gdd_scaling(std::string_view t) { return lookup(t, kGddScalings, "GDD scaling"); }
Linkage parse_linkage(std::string_view t) { return lookup(t, kLinkages, "linkage"); }
ClusteringMode parse_clustering_mode(std::string_view t) {
  return lookup(t, kClusteringModes, "clustering mode");
}
const char* snapshot_mode_name(SnapshotMode m) { return name_of(m, kModes); }
const char* separator_name(Separator s) { return name_of(s, kSeparators); }
const char* ota_scaling_name(OtaScaling s) { return name_of(s, kOtaScalings); }
const char* gdd_scaling_name(GddScaling s) { return name_of(s, kGddScalings); }
const char* clustering_mode_name(ClusteringMode m) { return name_of(m, kClusteringModes); }

void RunManifest::validate() const {
  if (networks.empty()) throw InvalidArgument("manifest lists no networks");
  std::set<std::string> names;
  for (const auto& net : networks) {
    if (net.name.empty()) throw InvalidArgument("network with an empty name");
    if (!names.insert(net.name).second) throw InvalidArgument("duplicate network name '" + net.name + "'");
    if (!std::filesystem::exists(net.input))
      throw InvalidArgument("network '" + net.name + "': input '" + net.input.string() + "' does not exist");
    if (net.policy) net.policy->validate();
  }
  check_graphlet_size(settings.k);
  settings.randomization.validate();
}

RunManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  {
    std::istringstream scan{std::string(text)};
    std::set<std::string> sections;
    std::string line;
    for (std::size_t line_no = 1; std::getline(scan, line); ++line_no) {
      const auto open = line.find_first_not_of(" \t");
      if (open == std::string::npos || line[open] != '[') continue;
      const auto close = line.find(']', open);
      if (close == std::string::npos) continue;
      const auto section = line.substr(open + 1, close - open - 1);
      if (!sections.insert(section).second)
        throw ParseError(line_no, section.rfind("network ", 0) == 0
                                      ? "duplicate network name '" + section.substr(8) + "'"
                                      : "duplicate section [" + section + "]");
    }
  }
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(e.line(), "manifest: " + e.message());
  }
  RunManifest manifest;
  for (const auto& [section, body] : tree) {
    if (section == "settings") {
      manifest.settings = read_settings(body);
    } else if (section.rfind("network ", 0) == 0) {
      auto name = section.substr(8);
      const auto first = name.find_first_not_of(' ');
      name = first == std::string::npos ? "" : name.substr(first);
      if (name.empty()) throw InvalidArgument("network section without a name");
      for (const auto& other : manifest.networks)
        if (other.name == name) throw InvalidArgument("duplicate network name '" + name + "'");
      manifest.networks.push_back(read_network(name, body, base_dir));
    } else if (body.empty() && !body.data().empty()) {
      throw InvalidArgument("key '" + section + "' outside a section");
    } else {
      throw InvalidArgument("unknown manifest section [" + section + "]");
    }
  }
  return manifest;
}

RunManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str(), path.parent_path());
}

}  // namespace orbitflow
