#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "npa/engine.hpp"
#include "npa/graph.hpp"
#include "npa/term.hpp"

namespace npa {

struct IsoVerdict {
  enum class Kind { isomorphic, non_isomorphic, unknown };

  Kind kind = Kind::unknown;
  /// Matching C multiset when isomorphic.
  CKey witness;
  /// Runs per graph when decided by sampling; 0 when decided exhaustively.
  std::size_t samples_tried = 0;
  bool exhaustive = false;
};

std::string to_string(IsoVerdict::Kind k);

inline constexpr std::size_t kDefaultIsoEdgeGuard = 5;

/// Exhaustive class intersection when both graphs have at most
/// exhaustive_edges edges; otherwise K sampled runs per graph, reporting
/// isomorphic on any C match and unknown otherwise. Sampling never yields
/// non_isomorphic.
IsoVerdict iso_test(TermStore& store, const LabeledGraph& g, const LabeledGraph& h, std::size_t k,
                    const SortConfig& config = {}, std::size_t exhaustive_edges = kDefaultIsoEdgeGuard);

/// Size of the multiset intersection of two sorted term-id lists.
std::size_t multiset_intersection_size(const std::vector<TermId>& a, const std::vector<TermId>& b);
bool is_sub_multiset(const std::vector<TermId>& small, const std::vector<TermId>& big);

struct SharedSubgraphBound {
  std::size_t count = 0;
  /// Matched encodings of the best paired run.
  std::vector<TermId> matched;
};

/// Max over K paired runs (same derived seed for both graphs) of |W(G) ∩ W(H)|.
/// Every matched entry certifies a subgraph common to both graphs.
SharedSubgraphBound shared_subgraph_bound(TermStore& store, const LabeledGraph& g, const LabeledGraph& h,
                                          std::size_t k, const SortConfig& config = {});

/// Whether some ordering of g yields a W containing the W of pattern. Since
/// any ordering of the pattern can be replayed first inside g, one fixed
/// ordering of the pattern is enough. Guarded on both edge counts.
bool detect_subgraph_class(TermStore& store, const LabeledGraph& pattern, const LabeledGraph& g,
                           std::size_t max_edges = kDefaultIsoEdgeGuard);

struct RedundancyReport {
  /// log10 of the product of t! over tie groups.
  double log10_edge_orders = 0.0;
  /// p * log10(2), p = edges whose orientation was a free coin flip between
  /// distinct components.
  double log10_orientation_factor = 0.0;
  std::size_t orientation_ties = 0;
  std::size_t levels = 0;
  std::vector<std::size_t> group_sizes;
};

/// Tie blocks of the sorted edge order are split into groups of edges whose
/// endpoint components (frozen at block start) overlap transitively.
RedundancyReport redundancy_report(TermStore& store, const LabeledGraph& g, const SortConfig& config);

struct DatasetStats {
  std::size_t graphs = 0;
  double mean_nodes = 0.0;
  double mean_edges = 0.0;
  double median_log10_edge_orders = 0.0;
  double median_log10_orientation_factor = 0.0;
  double mean_levels = 0.0;
};

/// Aggregates redundancy_report; graph i uses seed derive_seed(config.seed, i).
/// Throws std::invalid_argument on an empty collection.
DatasetStats dataset_stats(const std::vector<LabeledGraph>& graphs, const SortConfig& config);

}  // namespace npa
