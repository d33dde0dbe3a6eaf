#include "npa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "npa/isomorphism.hpp"

namespace npa {

std::string to_string(IsoVerdict::Kind k) {
  switch (k) {
    case IsoVerdict::Kind::isomorphic: return "isomorphic";
    case IsoVerdict::Kind::non_isomorphic: return "non-isomorphic";
    case IsoVerdict::Kind::unknown: return "unknown";
  }
  return "?";
}

IsoVerdict iso_test(TermStore& store, const LabeledGraph& g, const LabeledGraph& h, std::size_t k,
                    const SortConfig& config, std::size_t exhaustive_edges) {
  IsoVerdict verdict;
  if (g.num_edges() <= exhaustive_edges && h.num_edges() <= exhaustive_edges) {
    verdict.exhaustive = true;
    const auto cg = enumerate_encoding_class(store, g, config.variant, exhaustive_edges);
    const auto ch = enumerate_encoding_class(store, h, config.variant, exhaustive_edges);
    for (const auto& key : cg) {
      if (ch.contains(key)) {
        verdict.kind = IsoVerdict::Kind::isomorphic;
        verdict.witness = key;
        return verdict;
      }
    }
    verdict.kind = IsoVerdict::Kind::non_isomorphic;
    return verdict;
  }

  verdict.samples_tried = k;
  std::vector<CKey> keys_g;
  for (const auto& r : sample_orderings(store, g, config, k)) keys_g.push_back(r.c_key());
  std::sort(keys_g.begin(), keys_g.end());
  for (const auto& r : sample_orderings(store, h, config, k)) {
    auto key = r.c_key();
    if (std::binary_search(keys_g.begin(), keys_g.end(), key)) {
      verdict.kind = IsoVerdict::Kind::isomorphic;
      verdict.witness = std::move(key);
      return verdict;
    }
  }
  verdict.kind = IsoVerdict::Kind::unknown;
  return verdict;
}

std::size_t multiset_intersection_size(const std::vector<TermId>& a, const std::vector<TermId>& b) {
  std::size_t count = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count, ++i, ++j;
    }
  }
  return count;
}

bool is_sub_multiset(const std::vector<TermId>& small, const std::vector<TermId>& big) {
  return multiset_intersection_size(small, big) == small.size();
}

SharedSubgraphBound shared_subgraph_bound(TermStore& store, const LabeledGraph& g, const LabeledGraph& h,
                                          std::size_t k, const SortConfig& config) {
  if (k == 0) throw std::invalid_argument("sample count must be >= 1");
  SharedSubgraphBound best;
  for (std::size_t i = 0; i < k; ++i) {
    auto c = config;
    c.seed = derive_seed(config.seed, i);
    const auto wg = run(store, g, c).w_key();
    const auto wh = run(store, h, c).w_key();
    std::vector<TermId> matched;
    std::set_intersection(wg.begin(), wg.end(), wh.begin(), wh.end(), std::back_inserter(matched));
    if (i == 0 || matched.size() > best.count) {
      best.count = matched.size();
      best.matched = std::move(matched);
    }
  }
  return best;
}

bool detect_subgraph_class(TermStore& store, const LabeledGraph& pattern, const LabeledGraph& g,
                           std::size_t max_edges) {
  if (pattern.num_edges() > max_edges || g.num_edges() > max_edges) {
    throw GuardExceeded("subgraph-class detection refuses more than " + std::to_string(max_edges) + " edges");
  }
  if (pattern.num_vertices() > g.num_vertices() || pattern.num_edges() > g.num_edges()) return false;
  std::vector<OrientedEdge> identity;
  for (std::size_t i = 0; i < pattern.num_edges(); ++i) {
    identity.push_back({i, pattern.edges()[i].a, pattern.edges()[i].b});
  }
  const auto target = run_with_order(store, pattern, identity, Variant::npa).w_key();
  bool found = false;
  std::set<std::vector<TermId>> seen;
  for_each_ordering(g, [&](std::span<const OrientedEdge> order) {
    if (found) return;
    auto w = run_with_order(store, g, order, Variant::npa).w_key();
    if (!seen.insert(w).second) return;
    found = is_sub_multiset(target, w);
  });
  return found;
}

RedundancyReport redundancy_report(TermStore& store, const LabeledGraph& g, const SortConfig& config) {
  const auto r = run(store, g, config);
  RedundancyReport report;
  report.levels = r.levels;

  std::vector<Vertex> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::size_t pos = 0;
  for (const auto block : r.tie_blocks) {
    // Group edges of the block by transitive overlap of endpoint components.
    std::map<Vertex, Vertex> group_parent;
    auto gfind = [&](Vertex x) {
      auto it = group_parent.try_emplace(x, x).first;
      while (it->second != it->first) it = group_parent.find(it->second);
      return it->first;
    };
    std::vector<Vertex> anchor(block);
    for (std::size_t i = 0; i < block; ++i) {
      const auto& e = r.steps[pos + i].edge;
      const auto ra = gfind(find(e.first)), rb = gfind(find(e.second));
      if (ra != rb) group_parent[ra] = rb;
      anchor[i] = find(e.first);
    }
    std::map<Vertex, std::size_t> sizes;
    for (std::size_t i = 0; i < block; ++i) ++sizes[gfind(anchor[i])];
    for (const auto& [root, t] : sizes) {
      report.group_sizes.push_back(t);
      report.log10_edge_orders += std::lgamma(static_cast<double>(t) + 1.0) / std::log(10.0);
    }
    for (std::size_t i = 0; i < block; ++i) {
      const auto& e = r.steps[pos + i].edge;
      const auto ra = find(e.first), rb = find(e.second);
      if (ra != rb) parent[ra] = rb;
      if (r.steps[pos + i].orientation_free) ++report.orientation_ties;
    }
    pos += block;
  }
  report.log10_orientation_factor = static_cast<double>(report.orientation_ties) * std::log10(2.0);
  return report;
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

DatasetStats dataset_stats(const std::vector<LabeledGraph>& graphs, const SortConfig& config) {
  if (graphs.empty()) throw std::invalid_argument("dataset_stats needs at least one graph");
  DatasetStats stats;
  stats.graphs = graphs.size();
  std::vector<double> orders, orientation;
  double levels = 0, nodes = 0, edges = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    TermStore store;
    auto c = config;
    c.seed = derive_seed(config.seed, i);
    const auto rep = redundancy_report(store, graphs[i], c);
    orders.push_back(rep.log10_edge_orders);
    orientation.push_back(rep.log10_orientation_factor);
    levels += static_cast<double>(rep.levels);
    nodes += static_cast<double>(graphs[i].num_vertices());
    edges += static_cast<double>(graphs[i].num_edges());
  }
  const auto n = static_cast<double>(graphs.size());
  stats.mean_nodes = nodes / n;
  stats.mean_edges = edges / n;
  stats.mean_levels = levels / n;
  stats.median_log10_edge_orders = median(std::move(orders));
  stats.median_log10_orientation_factor = median(std::move(orientation));
  return stats;
}

}  // namespace npa
