#pragma once

#include <array>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "npa/graph.hpp"
#include "npa/term.hpp"

namespace npa {

/// Edge sort key prefix: none, [deg1], [deg1, deg2], or [deg1, deg2, label1, label2].
enum class EdgeSortMode { none, one_deg, two_degs, degs_and_labels };
/// How the two endpoints of an edge are ordered: uniformly at random, or by
/// ascending level of their current components (ties random).
enum class EndpointMode { random, by_level };
enum class Variant { npa, npba };

struct SortConfig {
  EdgeSortMode edge_mode = EdgeSortMode::degs_and_labels;
  EndpointMode endpoint_mode = EndpointMode::random;
  Variant variant = Variant::npa;
  std::uint64_t seed = 0;
};

std::string to_string(EdgeSortMode m);
std::string to_string(EndpointMode m);
std::string to_string(Variant v);
EdgeSortMode parse_edge_sort_mode(const std::string& s);
EndpointMode parse_endpoint_mode(const std::string& s);
Variant parse_variant(const std::string& s);

/// An edge with its endpoints in processing order (first is v_a).
struct OrientedEdge {
  std::size_t edge_index = 0;
  Vertex first = 0;
  Vertex second = 0;

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

using EdgeKey = std::array<std::size_t, 4>;

/// [deg1, deg2, label1, label2] with both pairs in descending order.
EdgeKey edge_key(const LabeledGraph& g, const Edge& e);

struct SortedEdges {
  std::vector<OrientedEdge> order;
  /// Sizes of consecutive runs of equal keys, in order.
  std::vector<std::size_t> tie_blocks;
};

/// Ascending order on the mode's key prefix with ties shuffled by the seed.
/// In random endpoint mode the orientation is drawn here; in by-level mode it
/// is provisional and decided during the run.
SortedEdges sort_edges(const LabeledGraph& g, const SortConfig& config);

struct MergeStep {
  OrientedEdge edge;
  /// W indices of the encodings of S1 and S2 before the merge.
  std::size_t first_component = 0;
  std::size_t second_component = 0;
  bool same_component = false;
  /// The orientation was a coin flip between distinct components.
  bool orientation_free = false;
  std::size_t level = 0;
};

/// Output of one parse: W holds the n leaf encodings followed by one encoding
/// per processed edge; C holds the encodings of the final components.
struct EncodingRun {
  Variant variant = Variant::npa;
  std::vector<CEncoding> W;
  std::vector<CEncoding> C;
  std::size_t levels = 0;
  std::vector<MergeStep> steps;
  std::vector<std::size_t> tie_blocks;
  /// h-values after the last merge (all zero-shift for NPBA).
  std::vector<Natural> final_h;

  /// Sorted term ids of C; equal keys (within one store) mean equal multisets.
  std::vector<TermId> c_key() const;
  /// Sorted term ids of W, optionally without the leaf entries.
  std::vector<TermId> w_key(bool include_leaves = true) const;
};

using CKey = std::vector<TermId>;
using EncodingClass = std::set<CKey>;

/// Raised when a runtime invariant of the parse is broken.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct RunOptions {
  /// Verify component disjointness/connectivity and h-value uniqueness after
  /// every merge. Costs O(component size) per step.
  bool check_invariants = false;
};

/// Parses g in the order produced by sort_edges(g, config), honoring config.variant.
EncodingRun run(TermStore& store, const LabeledGraph& g, const SortConfig& config, const RunOptions& options = {});

/// Same loop with h-values and the same-component indicator held constant.
EncodingRun run_npba(TermStore& store, const LabeledGraph& g, const SortConfig& config,
                     const RunOptions& options = {});

/// Parses g along an explicit, already oriented edge order.
EncodingRun run_with_order(TermStore& store, const LabeledGraph& g, std::span<const OrientedEdge> order,
                           Variant variant, const RunOptions& options = {});

/// Seed of the k-th sample; k = 0 gives the base seed back.
std::uint64_t derive_seed(std::uint64_t seed, std::size_t k);

/// K runs with seeds derive_seed(config.seed, 0..K-1).
std::vector<EncodingRun> sample_orderings(TermStore& store, const LabeledGraph& g, const SortConfig& config,
                                          std::size_t k);

inline constexpr std::size_t kDefaultEnumerationEdgeGuard = 6;

/// Every C multiset reachable over all m! edge orders and 2^m orientations.
/// Throws GuardExceeded beyond max_edges.
EncodingClass enumerate_encoding_class(TermStore& store, const LabeledGraph& g, Variant variant,
                                       std::size_t max_edges = kDefaultEnumerationEdgeGuard);

/// Visits every oriented edge order of g (m! * 2^m of them).
void for_each_ordering(const LabeledGraph& g, const std::function<void(std::span<const OrientedEdge>)>& visit);

/// Line-oriented dump: header, edge trace, W entries, C entries (canonical order).
std::string serialize_run(const TermStore& store, const EncodingRun& run);

}  // namespace npa
