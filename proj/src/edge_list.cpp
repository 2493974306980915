#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "orbitflow/error.hpp"
#include "orbitflow/temporal.hpp"

namespace orbitflow {

NodeIndex NodeLabels::intern(std::string_view label) {
  auto it = ids_.find(std::string(label));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<NodeIndex>(labels_.size());
  labels_.emplace_back(label);
  ids_.emplace(labels_.back(), id);
  return id;
}

std::optional<NodeIndex> NodeLabels::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

namespace {

constexpr std::string_view kBlank = " \t\r\v\f";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlank);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, Separator sep) {
  std::vector<std::string_view> fields;
  if (sep == Separator::Comma) {
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return fields;
  }
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(kBlank, pos);
    if (pos == std::string_view::npos) break;
    const auto end = line.find_first_of(kBlank, pos);
    fields.push_back(line.substr(pos, end - pos));
    if (end == std::string_view::npos) break;
    pos = end;
  }
  return fields;
}

struct RawEvent {
  std::string u;
  std::string v;
  Timestamp t;
};

}  // namespace

TemporalEdgeList parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::vector<RawEvent> raw;
  std::size_t data_lines = 0;
  std::size_t self_loops = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    ++data_lines;
    const auto fields = split_fields(content, options.separator);
    if (fields.size() != 3)
      throw ParseError(line_no, "expected 3 fields (u v t), found " + std::to_string(fields.size()));
    if (fields[0].empty() || fields[1].empty()) throw ParseError(line_no, "empty node label");
    Timestamp t = 0;
    const auto* first = fields[2].data();
    const auto* last = first + fields[2].size();
    const auto [ptr, ec] = std::from_chars(first, last, t);
    if (ec != std::errc{} || ptr != last || fields[2].empty())
      throw ParseError(line_no, "timestamp '" + std::string(fields[2]) + "' is not an integer");
    if (fields[0] == fields[1]) {
      ++self_loops;
      continue;
    }
    raw.push_back({std::string(fields[0]), std::string(fields[1]), t});
  }
  if (data_lines == 0) throw ParseError(0, "edge list is empty");

  std::stable_sort(raw.begin(), raw.end(),
                   [](const RawEvent& a, const RawEvent& b) { return a.t < b.t; });
  TemporalEdgeList out;
  out.dropped_self_loops = self_loops;
  out.events.reserve(raw.size());
  for (const auto& e : raw) {
    const auto u = out.labels.intern(e.u);
    const auto v = out.labels.intern(e.v);
    out.events.push_back({u, v, e.t});
  }
  out.origin = out.events.empty() ? 0 : out.events.front().t;
  return out;
}

TemporalEdgeList parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

TemporalEdgeList read_edge_list_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open edge list '" + path + "'");
  return parse_edge_list(in, options);
}

void serialize_edge_list(const TemporalEdgeList& edges, std::ostream& out,
                         const ParseOptions& options) {
  const char* sep = options.separator == Separator::Comma ? "," : " ";
  for (const auto& e : edges.events)
    out << edges.labels.label(e.u) << sep << edges.labels.label(e.v) << sep << e.t << '\n';
}

}  // namespace orbitflow
