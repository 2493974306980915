#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "orbitflow/agreement.hpp"
#include "orbitflow/census.hpp"
#include "orbitflow/cluster.hpp"
#include "orbitflow/gdd.hpp"
#include "orbitflow/transitions.hpp"

// CSV / JSON renderings of the library's result types.
namespace orbitflow::io {

// 12 significant digits, '.' decimal point, independent of the locale.
std::string format_number(double value);

// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string orbit_frequencies_csv(const OrbitFrequencyMatrix& fr,
                                  const std::vector<std::string>& node_labels);
std::string class_frequencies_csv(int k, const std::vector<std::uint64_t>& counts);
std::string gdd_csv(const GraphletDegreeDistribution& gdd);

// Square |O| x |O| table with "from\to" corner and orbit-id headers.
std::string transition_counts_csv(const OrbitTransitionMatrix& t);
std::string square_matrix_csv(const SquareMatrix& m);
std::string fingerprint_csv(const TransitionFingerprint& f);
std::string transitions_json(const std::string& network, const OrbitTransitionMatrix& t);

std::string similarity_csv(const SimilarityMatrix& sim);
SimilarityMatrix parse_similarity_csv(std::string_view text, SimilarityKind kind);
std::string merge_tree_json(const MergeTree& tree, Linkage linkage);

}  // namespace orbitflow::io
