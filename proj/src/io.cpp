#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "orbitflow/error.hpp"
#include "orbitflow/io.hpp"

namespace orbitflow::io {

using nlohmann::json;

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

namespace {

std::string orbit_header(std::size_t orbits) {
  std::string out;
  for (std::size_t o = 0; o < orbits; ++o) out += ",orbit_" + std::to_string(o + 1);
  return out;
}

}  // namespace

std::string orbit_frequencies_csv(const OrbitFrequencyMatrix& fr,
                                  const std::vector<std::string>& node_labels) {
  std::ostringstream out;
  out << "node" << orbit_header(fr.orbit_count()) << '\n';
  for (std::size_t v = 0; v < fr.node_count(); ++v) {
    out << (v < node_labels.size() ? node_labels[v] : std::to_string(v));
    for (auto c : fr.row(v)) out << ',' << c;
    out << '\n';
  }
  return out.str();
}

std::string class_frequencies_csv(int k, const std::vector<std::uint64_t>& counts) {
  const auto& table = ClassificationTable::get(k);
  std::ostringstream out;
  out << "class,name,edges,count\n";
  for (std::size_t c = 0; c < counts.size(); ++c)
    out << c + 1 << ',' << table.graphlet(c).name << ',' << table.graphlet(c).edge_count << ','
        << counts[c] << '\n';
  return out.str();
}

std::string gdd_csv(const GraphletDegreeDistribution& gdd) {
  std::ostringstream out;
  out << "k,orbit,degree,count,normalized\n";
  for (std::size_t j = 0; j < gdd.orbits.size(); ++j) {
    const auto& id = gdd.orbit_ids[j];
    for (const auto& [degree, count] : gdd.orbits[j].counts)
      out << id.k << ',' << id.index << ',' << degree << ',' << count << ','
          << format_number(gdd.orbits[j].normalized.at(degree)) << '\n';
  }
  return out.str();
}

namespace {

template <class Cell>
std::string square_csv(std::size_t m, Cell cell) {
  std::ostringstream out;
  out << "from\\to";
  for (std::size_t b = 0; b < m; ++b) out << ',' << b + 1;
  out << '\n';
  for (std::size_t a = 0; a < m; ++a) {
    out << a + 1;
    for (std::size_t b = 0; b < m; ++b) out << ',' << cell(a, b);
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string transition_counts_csv(const OrbitTransitionMatrix& t) {
  return square_csv(t.orbit_count(), [&](std::size_t a, std::size_t b) { return t.at(a, b); });
}

std::string square_matrix_csv(const SquareMatrix& m) {
  return square_csv(m.size(), [&](std::size_t a, std::size_t b) { return format_number(m(a, b)); });
}

std::string fingerprint_csv(const TransitionFingerprint& f) {
  return square_csv(f.size, [&](std::size_t a, std::size_t b) { return band_name(f(a, b)); });
}

std::string transitions_json(const std::string& network, const OrbitTransitionMatrix& t) {
  const std::size_t m = t.orbit_count();
  const auto normalized = row_normalize(t);
  const auto fingerprint = discretize(normalized);
  json counts = json::array(), norm = json::array(), bands = json::array(), dissolved = json::array();
  for (std::size_t a = 0; a < m; ++a) {
    json crow = json::array(), nrow = json::array(), brow = json::array();
    for (std::size_t b = 0; b < m; ++b) {
      crow.push_back(t.at(a, b));
      nrow.push_back(normalized(a, b));
      brow.push_back(band_name(fingerprint(a, b)));
    }
    counts.push_back(std::move(crow));
    norm.push_back(std::move(nrow));
    bands.push_back(std::move(brow));
    dissolved.push_back(t.dissolved(a));
  }
  json doc = {
      {"network", network},
      {"k", t.k()},
      {"orbits", m},
      {"pairs_processed", t.pairs_processed()},
      {"total_counts", t.total_counts()},
      {"total_dissolved", t.total_dissolved()},
      {"counts", counts},
      {"dissolved", dissolved},
      {"normalized", norm},
      {"fingerprint", bands},
  };
  return doc.dump(2) + "\n";
}

std::string similarity_csv(const SimilarityMatrix& sim) {
  std::ostringstream out;
  out << kind_name(sim.kind);
  for (const auto& name : sim.names) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < sim.names.size(); ++i) {
    out << sim.names[i];
    for (std::size_t j = 0; j < sim.names.size(); ++j) out << ',' << format_number(sim.values(i, j));
    out << '\n';
  }
  return out.str();
}

SimilarityMatrix parse_similarity_csv(std::string_view text, SimilarityKind kind) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw ParseError(0, "similarity matrix is empty");
  const std::size_t n = rows.front().size() - 1;
  SimilarityMatrix sim;
  sim.kind = kind;
  sim.names.assign(rows.front().begin() + 1, rows.front().end());
  sim.values = SquareMatrix(n);
  if (rows.size() != n + 1) throw ParseError(0, "similarity matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != n + 1) throw ParseError(i + 2, "expected " + std::to_string(n + 1) + " fields");
    if (row.front() != sim.names[i]) throw ParseError(i + 2, "row label does not match header");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& f = row[j + 1];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || ptr != f.data() + f.size())
        throw ParseError(i + 2, "'" + f + "' is not a number");
      sim.values(i, j) = v;
    }
  }
  return sim;
}

std::string merge_tree_json(const MergeTree& tree, Linkage linkage) {
  json merges = json::array();
  for (const auto& m : tree.merges)
    merges.push_back({{"left", m.left}, {"right", m.right}, {"height", m.height}, {"size", m.size}});
  json doc = {{"linkage", linkage_name(linkage)}, {"leaves", tree.leaves}, {"merges", merges}};
  return doc.dump(2) + "\n";
}

}  // namespace orbitflow::io
