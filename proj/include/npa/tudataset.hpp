#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "npa/graph.hpp"

namespace npa {

/// Reads the TU Dortmund text layout (`<name>_A.txt`, `<name>_graph_indicator.txt`,
/// `<name>_graph_labels.txt`, optional `<name>_node_labels.txt`). Vertices are
/// remapped to 0-based indices per graph and symmetric arc pairs are stored as
/// one undirected edge. Node labels are shifted so the smallest becomes >= 1.
/// Throws GraphError with file and line on malformed input.
std::vector<ClassifiedGraph> load_tudataset(const std::filesystem::path& directory, const std::string& name);

}  // namespace npa
