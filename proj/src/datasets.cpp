#include "npa/datasets.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "npa/isomorphism.hpp"

namespace npa {
namespace {

// Appends a cycle of `length` vertices starting at `first`.
void add_cycle(std::vector<Edge>& edges, Vertex first, std::size_t length) {
  for (std::size_t i = 0; i < length; ++i) {
    edges.push_back({static_cast<Vertex>(first + i), static_cast<Vertex>(first + (i + 1) % length)});
  }
}

// Adds g unless an isomorphic copy is already present.
bool add_if_new(std::vector<ClassifiedGraph>& out, LabeledGraph g) {
  for (const auto& existing : out) {
    if (are_isomorphic_bruteforce(existing.graph, g, 64)) return false;
  }
  const int cls = static_cast<int>(out.size()) + 1;
  out.push_back({std::move(g), cls});
  return true;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = rng.max() - (rng.max() % n);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

}  // namespace

std::vector<ClassifiedGraph> gen_gnn_hard() {
  std::vector<ClassifiedGraph> out;
  for (std::size_t n = 2; n <= 32; n += 2) {
    std::vector<Edge> two;
    add_cycle(two, 0, n / 2);
    add_cycle(two, static_cast<Vertex>(n / 2), n / 2);
    out.push_back({LabeledGraph(std::vector<Label>(n, 1), std::move(two)), 1});
    std::vector<Edge> one;
    add_cycle(one, 0, n);
    out.push_back({LabeledGraph(std::vector<Label>(n, 1), std::move(one)), 2});
  }
  return out;
}

std::vector<ClassifiedGraph> gen_npba_hard(bool single_node_loops) {
  std::vector<ClassifiedGraph> out;
  for (std::size_t m = 2; m <= 19; ++m) {
    out.push_back({LabeledGraph({1, 1}, std::vector<Edge>(m, Edge{0, 1})), 1});
    const std::size_t n = single_node_loops ? 1 : 2;
    out.push_back({LabeledGraph(std::vector<Label>(n, 1), std::vector<Edge>(m, Edge{0, 0})), 2});
  }
  return out;
}

std::vector<ClassifiedGraph> gen_erdos(std::size_t count, std::size_t n, double edge_prob, bool labeled,
                                       std::uint64_t seed, std::size_t max_retries) {
  if (n == 0) throw std::invalid_argument("erdos: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<ClassifiedGraph> out;
  std::size_t misses = 0;
  while (out.size() < count) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < edge_prob) edges.push_back({a, b});
      }
    }
    std::vector<Label> labels(n, 1);
    if (labeled) {
      for (auto& l : labels) l = static_cast<Label>(1 + draw(rng, n));
    }
    if (add_if_new(out, LabeledGraph(std::move(labels), std::move(edges)))) {
      misses = 0;
    } else if (++misses > max_retries) {
      throw std::runtime_error("erdos: could not find " + std::to_string(count) + " non-isomorphic graphs");
    }
  }
  return out;
}

std::vector<ClassifiedGraph> gen_random_regular(std::size_t count, std::size_t n, std::size_t degree,
                                                std::uint64_t seed, bool simple_only, std::size_t max_retries) {
  if ((n * degree) % 2 != 0) throw std::invalid_argument("random-regular: n * degree must be even");
  std::mt19937_64 rng(seed);
  std::vector<ClassifiedGraph> out;
  std::size_t misses = 0, rejected = 0;
  while (out.size() < count) {
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);
    for (auto i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[draw(rng, i)]);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      Edge e{std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1])};
      if (e.is_loop() || std::find(edges.begin(), edges.end(), e) != edges.end()) simple = false;
      edges.push_back(e);
    }
    // Non-simple draws in simple mode are rejected without counting as a
    // duplicate; they are bounded separately.
    if (simple_only && !simple) {
      if (++rejected > 1000 * max_retries) throw std::runtime_error("random-regular: no simple matching found");
      continue;
    }
    if (add_if_new(out, LabeledGraph(std::vector<Label>(n, 1), std::move(edges)))) {
      misses = 0;
    } else if (++misses > max_retries) {
      throw std::runtime_error("random-regular: could not find " + std::to_string(count) +
                               " non-isomorphic graphs");
    }
  }
  return out;
}

SyntheticSpec default_spec(const std::string& family) {
  SyntheticSpec spec;
  spec.family = family;
  if (family == "gnn-hard" || family == "npba-hard") return spec;
  if (family == "erdos") {
    spec.count = 30;
    spec.n = 10;
  } else if (family == "erdos-labels") {
    spec.count = 100;
    spec.n = 10;
  } else if (family == "random-regular") {
    spec.count = 10;
    spec.n = 8;
    spec.degree = 4;
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  return spec;
}

std::vector<ClassifiedGraph> generate(const SyntheticSpec& spec) {
  if (spec.family == "gnn-hard") return gen_gnn_hard();
  if (spec.family == "npba-hard") return gen_npba_hard(spec.single_node_loops);
  if (spec.family == "erdos") return gen_erdos(spec.count, spec.n, spec.edge_prob, false, spec.seed);
  if (spec.family == "erdos-labels") return gen_erdos(spec.count, spec.n, spec.edge_prob, true, spec.seed);
  if (spec.family == "random-regular") {
    return gen_random_regular(spec.count, spec.n, spec.degree, spec.seed, spec.simple_only);
  }
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

void write_dataset(const std::filesystem::path& dir, const SyntheticSpec& spec,
                   const std::vector<ClassifiedGraph>& graphs) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json manifest;
  manifest["family"] = spec.family;
  manifest["parameters"] = {{"count", spec.count},
                            {"n", spec.n},
                            {"degree", spec.degree},
                            {"edge_prob", spec.edge_prob},
                            {"single_node_loops", spec.single_node_loops},
                            {"simple_only", spec.simple_only}};
  manifest["seed"] = spec.seed;
  auto& entries = manifest["graphs"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::ostringstream name;
    name << "graph_" << std::setw(3) << std::setfill('0') << i << ".txt";
    std::ofstream(dir / name.str()) << serialize_edge_list(graphs[i].graph) << "\n";
    entries.push_back({{"file", name.str()}, {"class", graphs[i].class_id}});
  }
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
}

}  // namespace npa
