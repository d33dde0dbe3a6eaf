#include "npa/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace npa {
namespace {

class Multiplicities {
 public:
  explicit Multiplicities(const LabeledGraph& g) : n_(g.num_vertices()), counts_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
      ++counts_[e.a * n_ + e.b];
      if (e.a != e.b) ++counts_[e.b * n_ + e.a];
    }
  }
  std::size_t operator()(Vertex u, Vertex v) const { return counts_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<std::size_t> counts_;
};

std::vector<std::pair<Label, std::size_t>> label_degree_profile(const LabeledGraph& g) {
  std::vector<std::pair<Label, std::size_t>> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.emplace_back(g.label(v), g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Shared backtracking core. In exact mode multiplicities must match and the
// map is a bijection; otherwise pattern multiplicities are bounded by host ones.
class Matcher {
 public:
  Matcher(const LabeledGraph& pattern, const LabeledGraph& host, bool exact)
      : pattern_(pattern), host_(host), pm_(pattern), hm_(host), exact_(exact),
        assignment_(pattern.num_vertices(), 0), used_(host.num_vertices(), false) {
    order_.resize(pattern.num_vertices());
    for (Vertex v = 0; v < pattern.num_vertices(); ++v) order_[v] = v;
    // Most constrained first: high degree, then connectivity to earlier picks.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
    for (std::size_t i = 1; i < order_.size(); ++i) {
      auto best = i;
      std::size_t best_links = 0;
      for (auto j = i; j < order_.size(); ++j) {
        std::size_t links = 0;
        for (std::size_t k = 0; k < i; ++k) links += pm_(order_[j], order_[k]);
        if (links > best_links) {
          best = j;
          best_links = links;
        }
      }
      std::rotate(order_.begin() + i, order_.begin() + best, order_.begin() + best + 1);
    }
  }

  bool solve() { return extend(0); }

 private:
  bool compatible(Vertex p, Vertex h) const {
    if (pattern_.label(p) != host_.label(h)) return false;
    if (exact_) return pattern_.degree(p) == host_.degree(h) && pm_(p, p) == hm_(h, h);
    return pattern_.degree(p) <= host_.degree(h) && pm_(p, p) <= hm_(h, h);
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    for (Vertex h = 0; h < host_.num_vertices(); ++h) {
      if (used_[h] || !compatible(p, h)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex q = order_[k];
        const auto want = pm_(p, q);
        const auto have = hm_(h, assignment_[q]);
        ok = exact_ ? want == have : want <= have;
      }
      if (!ok) continue;
      assignment_[p] = h;
      used_[h] = true;
      if (extend(depth + 1)) return true;
      used_[h] = false;
    }
    return false;
  }

  const LabeledGraph& pattern_;
  const LabeledGraph& host_;
  Multiplicities pm_;
  Multiplicities hm_;
  bool exact_;
  std::vector<Vertex> order_;
  std::vector<Vertex> assignment_;
  std::vector<bool> used_;
};

}  // namespace

bool are_isomorphic_bruteforce(const LabeledGraph& g, const LabeledGraph& h, std::size_t max_vertices) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  if (label_degree_profile(g) != label_degree_profile(h)) return false;
  if (g.num_components() != h.num_components()) return false;
  if (g.num_vertices() > max_vertices) {
    throw GuardExceeded("isomorphism oracle refuses graphs with " + std::to_string(g.num_vertices()) +
                        " vertices (guard " + std::to_string(max_vertices) + ")");
  }
  return Matcher(g, h, true).solve();
}

bool contains_subgraph_bruteforce(const LabeledGraph& pattern, const LabeledGraph& host,
                                  std::size_t max_vertices) {
  if (pattern.num_vertices() > host.num_vertices() || pattern.num_edges() > host.num_edges()) return false;
  if (host.num_vertices() > max_vertices) {
    throw GuardExceeded("subgraph oracle refuses hosts with " + std::to_string(host.num_vertices()) +
                        " vertices (guard " + std::to_string(max_vertices) + ")");
  }
  return Matcher(pattern, host, false).solve();
}

}  // namespace npa
