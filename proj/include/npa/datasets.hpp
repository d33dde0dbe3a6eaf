#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "npa/graph.hpp"

namespace npa {

/// Two disjoint cycles of n/2 vertices (class 1) vs one n-cycle (class 2) for
/// n = 2, 4, ..., 32. A 2-cycle is a parallel edge pair, a 1-cycle a self-loop.
std::vector<ClassifiedGraph> gen_gnn_hard();

/// m parallel edges between two vertices (class 1) vs m self-loops on one
/// vertex (class 2) for m = 2..19. Class 2 keeps an isolated second vertex
/// unless single_node_loops is set.
std::vector<ClassifiedGraph> gen_npba_hard(bool single_node_loops = false);

/// Pairwise non-isomorphic G(n, p) draws, each its own class. With labeled set,
/// labels are uniform on {1..n}. Throws std::runtime_error when max_retries
/// draws in a row are all duplicates.
std::vector<ClassifiedGraph> gen_erdos(std::size_t count, std::size_t n, double edge_prob, bool labeled,
                                       std::uint64_t seed, std::size_t max_retries = 10000);

/// Pairwise non-isomorphic configuration-model graphs, each its own class.
/// Stub matching keeps loops and parallel edges unless simple_only is set, in
/// which case non-simple matchings are rejected.
std::vector<ClassifiedGraph> gen_random_regular(std::size_t count, std::size_t n, std::size_t degree,
                                                std::uint64_t seed, bool simple_only = false,
                                                std::size_t max_retries = 10000);

struct SyntheticSpec {
  std::string family;  // gnn-hard | npba-hard | erdos | erdos-labels | random-regular
  std::size_t count = 0;
  std::size_t n = 0;
  std::size_t degree = 4;
  double edge_prob = 0.5;
  bool single_node_loops = false;
  bool simple_only = false;
  std::uint64_t seed = 0;
};

/// Family defaults: erdos 30 x n=10, erdos-labels 100 x n=10, random-regular 10 x n=8, d=4.
SyntheticSpec default_spec(const std::string& family);
std::vector<ClassifiedGraph> generate(const SyntheticSpec& spec);

/// Writes graph_<i>.txt (edge-list format) for each graph plus manifest.json
/// holding the spec and class ids.
void write_dataset(const std::filesystem::path& dir, const SyntheticSpec& spec,
                   const std::vector<ClassifiedGraph>& graphs);

}  // namespace npa
