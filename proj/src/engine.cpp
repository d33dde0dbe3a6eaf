#include "npa/engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "npa/isomorphism.hpp"

namespace npa {

std::string to_string(EdgeSortMode m) {
  switch (m) {
    case EdgeSortMode::none: return "none";
    case EdgeSortMode::one_deg: return "one-deg";
    case EdgeSortMode::two_degs: return "two-degs";
    case EdgeSortMode::degs_and_labels: return "degs-and-labels";
  }
  return "?";
}

std::string to_string(EndpointMode m) { return m == EndpointMode::random ? "random" : "by-level"; }
std::string to_string(Variant v) { return v == Variant::npa ? "npa" : "npba"; }

EdgeSortMode parse_edge_sort_mode(const std::string& s) {
  for (auto m : {EdgeSortMode::none, EdgeSortMode::one_deg, EdgeSortMode::two_degs, EdgeSortMode::degs_and_labels}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown edge sort mode '" + s + "'");
}

EndpointMode parse_endpoint_mode(const std::string& s) {
  if (s == "random") return EndpointMode::random;
  if (s == "by-level") return EndpointMode::by_level;
  throw std::invalid_argument("unknown endpoint mode '" + s + "'");
}

Variant parse_variant(const std::string& s) {
  if (s == "npa") return Variant::npa;
  if (s == "npba") return Variant::npba;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream: the i-th draw is splitmix(key + i).
class TieBreaker {
 public:
  TieBreaker(std::uint64_t seed, std::uint64_t graph_fingerprint) : key_(splitmix(seed) ^ splitmix(~graph_fingerprint)) {}

  std::uint64_t next() { return splitmix(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

  // Uniform in [0, n), rejection sampled.
  std::size_t below(std::size_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::size_t key_length(EdgeSortMode m) {
  switch (m) {
    case EdgeSortMode::none: return 0;
    case EdgeSortMode::one_deg: return 1;
    case EdgeSortMode::two_degs: return 2;
    case EdgeSortMode::degs_and_labels: return 4;
  }
  return 0;
}

SortedEdges sort_edges_with(const LabeledGraph& g, const SortConfig& config, TieBreaker& rng) {
  const auto m = g.num_edges();
  const auto len = key_length(config.edge_mode);
  std::vector<EdgeKey> keys(m);
  for (std::size_t i = 0; i < m; ++i) {
    keys[i] = edge_key(g, g.edges()[i]);
    std::fill(keys[i].begin() + static_cast<std::ptrdiff_t>(len), keys[i].end(), 0);
  }
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  SortedEdges out;
  for (std::size_t start = 0; start < m;) {
    auto end = start + 1;
    while (end < m && keys[idx[end]] == keys[idx[start]]) ++end;
    // Fisher-Yates within the tie block.
    for (auto i = end - start; i > 1; --i) std::swap(idx[start + i - 1], idx[start + rng.below(i)]);
    out.tie_blocks.push_back(end - start);
    start = end;
  }
  out.order.reserve(m);
  for (auto i : idx) {
    const auto& e = g.edges()[i];
    OrientedEdge oe{i, e.a, e.b};
    if (config.endpoint_mode == EndpointMode::random && rng.coin()) std::swap(oe.first, oe.second);
    out.order.push_back(oe);
  }
  return out;
}

// Union-find over vertices carrying each component's encoding, level and
// member list, plus the per-vertex h-values.
class ParseState {
 public:
  ParseState(TermStore& store, const LabeledGraph& g, Variant variant, const RunOptions& options)
      : store_(store), g_(g), variant_(variant), check_(options.check_invariants), parent_(g.num_vertices()),
        h_(g.num_vertices()), component_(g.num_vertices()) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
    run_.variant = variant;
    run_.W.reserve(g.num_vertices() + g.num_edges());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      h_[v] = g.label(v);
      auto y = store_.leaf(g.label(v));
      component_[v] = Component{store_.encoding(y), v, 0, {v}};
      run_.W.push_back(component_[v].encoding);
    }
    if (check_) processed_.resize(g.num_vertices());
  }

  Vertex find(Vertex x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  std::size_t level_of(Vertex v) { return component_[find(v)].level; }

  void merge(OrientedEdge edge, bool orientation_free) {
    const Vertex va = edge.first, vb = edge.second;
    const Vertex r1 = find(va), r2 = find(vb);
    const bool same = r1 == r2;
    Component& s1 = component_[r1];
    Component& s2 = component_[r2];
    if (check_) check_disjoint(r1, r2);

    TermId y;
    if (variant_ == Variant::npa) {
      y = store_.merge(TermChild{s1.encoding.y, h_[va], s1.encoding.m1, s1.encoding.m2},
                       TermChild{s2.encoding.y, h_[vb], s2.encoding.m1, s2.encoding.m2}, same);
    } else {
      y = store_.merge(TermChild{s1.encoding.y, 0, s1.encoding.m1, s1.encoding.m2},
                       TermChild{s2.encoding.y, 0, s2.encoding.m1, s2.encoding.m2}, false);
    }
    CEncoding enc = store_.encoding(y);
    if (variant_ == Variant::npa) {
      for (auto v : s1.members) h_[v] += enc.m1;
    }

    MergeStep step;
    step.edge = edge;
    step.first_component = s1.w_index;
    step.second_component = s2.w_index;
    step.same_component = same;
    step.orientation_free = orientation_free;
    step.level = 1 + std::max(s1.level, s2.level);
    run_.levels = std::max(run_.levels, step.level);

    Vertex root = r1;
    if (!same) {
      // Union by size; the surviving root keeps the merged member list.
      root = s1.members.size() >= s2.members.size() ? r1 : r2;
      const Vertex other = root == r1 ? r2 : r1;
      auto& keep = component_[root].members;
      auto& take = component_[other].members;
      keep.insert(keep.end(), take.begin(), take.end());
      take.clear();
      take.shrink_to_fit();
      parent_[other] = root;
    }
    component_[root].encoding = std::move(enc);
    component_[root].level = step.level;
    component_[root].w_index = run_.W.size();
    run_.W.push_back(component_[root].encoding);
    run_.steps.push_back(step);

    if (check_) {
      processed_[va].push_back(vb);
      processed_[vb].push_back(va);
      check_component(root);
    }
  }

  EncodingRun finish() && {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (find(v) == v) run_.C.push_back(component_[v].encoding);
    }
    run_.final_h = std::move(h_);
    return std::move(run_);
  }

  EncodingRun& output() { return run_; }

 private:
  struct Component {
    CEncoding encoding;
    std::size_t w_index = 0;
    std::size_t level = 0;
    std::vector<Vertex> members;
  };

  void check_disjoint(Vertex r1, Vertex r2) {
    for (auto v : component_[r1].members) {
      if (find(v) != r1) throw InvariantViolation("component member with foreign root");
    }
    if (r1 == r2) return;
    for (auto v : component_[r2].members) {
      if (find(v) == r1) throw InvariantViolation("components share a vertex");
    }
  }

  void check_component(Vertex root) {
    const auto& members = component_[root].members;
    // Connected through processed edges.
    std::vector<char> seen(g_.num_vertices(), 0);
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      ++reached;
      for (auto w : processed_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (reached != members.size()) throw InvariantViolation("component is not connected by its parsed edges");
    if (variant_ == Variant::npba) return;
    std::vector<Natural> hs;
    hs.reserve(members.size());
    for (auto v : members) hs.push_back(h_[v]);
    std::sort(hs.begin(), hs.end());
    if (std::adjacent_find(hs.begin(), hs.end()) != hs.end()) {
      throw InvariantViolation("h-values within a component are not unique");
    }
    if (!(component_[root].encoding.m2 > hs.back())) {
      throw InvariantViolation("m2 does not exceed the component's h-values");
    }
  }

  TermStore& store_;
  const LabeledGraph& g_;
  Variant variant_;
  bool check_;
  std::vector<Vertex> parent_;
  std::vector<Natural> h_;
  std::vector<Component> component_;
  std::vector<std::vector<Vertex>> processed_;
  EncodingRun run_;
};

EncodingRun run_impl(TermStore& store, const LabeledGraph& g, const SortConfig& config, Variant variant,
                     const RunOptions& options) {
  TieBreaker rng(config.seed, g.fingerprint());
  auto sorted = sort_edges_with(g, config, rng);
  ParseState state(store, g, variant, options);
  for (auto edge : sorted.order) {
    bool free = false;
    if (!g.edges()[edge.edge_index].is_loop()) {
      if (config.endpoint_mode == EndpointMode::by_level) {
        const auto la = state.level_of(edge.first), lb = state.level_of(edge.second);
        if (la > lb) {
          std::swap(edge.first, edge.second);
        } else if (la == lb && state.find(edge.first) != state.find(edge.second)) {
          free = true;
          if (rng.coin()) std::swap(edge.first, edge.second);
        }
      } else {
        free = state.find(edge.first) != state.find(edge.second);
      }
    }
    state.merge(edge, free);
  }
  state.output().tie_blocks = std::move(sorted.tie_blocks);
  return std::move(state).finish();
}

}  // namespace

EdgeKey edge_key(const LabeledGraph& g, const Edge& e) {
  const auto da = g.degree(e.a), db = g.degree(e.b);
  const auto la = g.label(e.a), lb = g.label(e.b);
  return {std::max(da, db), std::min(da, db), std::max(la, lb), std::min(la, lb)};
}

SortedEdges sort_edges(const LabeledGraph& g, const SortConfig& config) {
  TieBreaker rng(config.seed, g.fingerprint());
  return sort_edges_with(g, config, rng);
}

std::vector<TermId> EncodingRun::c_key() const {
  std::vector<TermId> key;
  key.reserve(C.size());
  for (const auto& c : C) key.push_back(c.y);
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<TermId> EncodingRun::w_key(bool include_leaves) const {
  std::vector<TermId> key;
  key.reserve(W.size());
  for (const auto& w : W) {
    if (include_leaves || w.m1 != 0) key.push_back(w.y);
  }
  std::sort(key.begin(), key.end());
  return key;
}

EncodingRun run(TermStore& store, const LabeledGraph& g, const SortConfig& config, const RunOptions& options) {
  return run_impl(store, g, config, config.variant, options);
}

EncodingRun run_npba(TermStore& store, const LabeledGraph& g, const SortConfig& config, const RunOptions& options) {
  return run_impl(store, g, config, Variant::npba, options);
}

EncodingRun run_with_order(TermStore& store, const LabeledGraph& g, std::span<const OrientedEdge> order,
                           Variant variant, const RunOptions& options) {
  if (order.size() != g.num_edges()) throw std::invalid_argument("edge order must cover every edge once");
  std::vector<char> used(g.num_edges(), 0);
  ParseState state(store, g, variant, options);
  for (const auto& edge : order) {
    if (edge.edge_index >= g.num_edges() || used[edge.edge_index]) {
      throw std::invalid_argument("edge order must cover every edge once");
    }
    used[edge.edge_index] = 1;
    const auto& e = g.edges()[edge.edge_index];
    if (!((edge.first == e.a && edge.second == e.b) || (edge.first == e.b && edge.second == e.a))) {
      throw std::invalid_argument("oriented edge does not match the graph's edge");
    }
    state.merge(edge, !e.is_loop() && state.find(edge.first) != state.find(edge.second));
  }
  return std::move(state).finish();
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t k) {
  return k == 0 ? seed : splitmix(seed ^ splitmix(0x5eedULL + k));
}

std::vector<EncodingRun> sample_orderings(TermStore& store, const LabeledGraph& g, const SortConfig& config,
                                          std::size_t k) {
  if (k == 0) throw std::invalid_argument("sample count must be >= 1");
  std::vector<EncodingRun> runs;
  runs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = config;
    c.seed = derive_seed(config.seed, i);
    runs.push_back(run(store, g, c));
  }
  return runs;
}

void for_each_ordering(const LabeledGraph& g, const std::function<void(std::span<const OrientedEdge>)>& visit) {
  const auto m = g.num_edges();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<OrientedEdge> order(m);
  do {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      for (std::size_t i = 0; i < m; ++i) {
        const auto& e = g.edges()[perm[i]];
        order[i] = (mask >> i) & 1 ? OrientedEdge{perm[i], e.b, e.a} : OrientedEdge{perm[i], e.a, e.b};
      }
      visit(order);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

EncodingClass enumerate_encoding_class(TermStore& store, const LabeledGraph& g, Variant variant,
                                       std::size_t max_edges) {
  if (g.num_edges() > max_edges) {
    throw GuardExceeded("encoding-class enumeration refuses " + std::to_string(g.num_edges()) + " edges (guard " +
                        std::to_string(max_edges) + ")");
  }
  EncodingClass out;
  for_each_ordering(g, [&](std::span<const OrientedEdge> order) {
    out.insert(run_with_order(store, g, order, variant).c_key());
  });
  return out;
}

std::string serialize_run(const TermStore& store, const EncodingRun& run) {
  std::ostringstream out;
  auto enc = [&](const CEncoding& c) {
    return store.serialize(c.y) + " m1=" + to_string(c.m1) + " m2=" + to_string(c.m2);
  };
  out << "variant " << to_string(run.variant) << "\n";
  out << "levels " << run.levels << "\n";
  for (std::size_t i = 0; i < run.steps.size(); ++i) {
    const auto& s = run.steps[i];
    out << "step " << i << " edge=" << s.edge.edge_index << " " << s.edge.first << "-" << s.edge.second
        << " b=" << (s.same_component ? 1 : 0) << " level=" << s.level << "\n";
  }
  for (std::size_t i = 0; i < run.W.size(); ++i) out << "W " << i << " " << enc(run.W[i]) << "\n";
  auto c = run.C;
  std::sort(c.begin(), c.end(), [&](const CEncoding& a, const CEncoding& b) { return store.compare(a.y, b.y) < 0; });
  for (const auto& e : c) out << "C " << enc(e) << "\n";
  return out.str();
}

}  // namespace npa
