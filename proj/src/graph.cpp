#include "npa/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

namespace npa {

LabeledGraph::LabeledGraph(std::vector<Label> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)), degrees_(labels_.size(), 0) {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] < 1) {
      throw GraphError("label of vertex " + std::to_string(v) + " must be >= 1");
    }
  }
  for (auto& e : edges_) {
    if (e.a >= labels_.size() || e.b >= labels_.size()) {
      throw GraphError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                       " has an endpoint out of range (n=" + std::to_string(labels_.size()) + ")");
    }
    if (e.a > e.b) std::swap(e.a, e.b);
    degrees_[e.a] += 1;
    degrees_[e.b] += 1;
  }
}

Label LabeledGraph::max_label() const {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

std::size_t LabeledGraph::multiplicity(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.a == u && e.b == v; }));
}

std::size_t LabeledGraph::num_components() const {
  std::vector<Vertex> parent(num_vertices());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = num_vertices();
  for (const auto& e : edges_) {
    auto ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

LabeledGraph LabeledGraph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != num_vertices()) throw GraphError("permutation size mismatch");
  std::vector<Label> labels(num_vertices());
  for (std::size_t v = 0; v < num_vertices(); ++v) labels[perm[v]] = labels_[v];
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({perm[e.a], perm[e.b]});
  return LabeledGraph(std::move(labels), std::move(edges));
}

std::uint64_t LabeledGraph::fingerprint() const {
  // FNV-1a over the numeric content.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(labels_.size());
  for (auto l : labels_) mix(l);
  mix(edges_.size());
  for (const auto& e : edges_) mix((std::uint64_t{e.a} << 32) | e.b);
  return h;
}

namespace {

std::uint64_t parse_uint(std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw GraphError("malformed " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

LabeledGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string field;
  std::optional<std::uint64_t> n;
  std::optional<std::vector<Label>> labels;
  std::optional<std::vector<Edge>> edges;
  while (in >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw GraphError("malformed field '" + field + "'");
    std::string_view key(field.data(), eq);
    std::string_view value(field.data() + eq + 1, field.size() - eq - 1);
    if (key == "n") {
      if (n) throw GraphError("duplicate field n");
      n = parse_uint(value, "vertex count");
    } else if (key == "labels") {
      if (labels) throw GraphError("duplicate field labels");
      labels.emplace();
      for (auto tok : split(value, ',')) {
        auto l = parse_uint(tok, "label");
        if (l < 1) throw GraphError("label must be >= 1");
        labels->push_back(static_cast<Label>(l));
      }
    } else if (key == "e") {
      if (edges) throw GraphError("duplicate field e");
      edges.emplace();
      for (auto tok : split(value, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string_view::npos) throw GraphError("malformed edge '" + std::string(tok) + "'");
        edges->push_back({static_cast<Vertex>(parse_uint(tok.substr(0, dash), "edge endpoint")),
                          static_cast<Vertex>(parse_uint(tok.substr(dash + 1), "edge endpoint"))});
      }
    } else {
      throw GraphError("unknown field '" + std::string(key) + "'");
    }
  }
  if (!n || !labels) throw GraphError("edge list needs n= and labels= fields");
  if (*n == 0) throw GraphError("graph must have at least one vertex");
  if (labels->size() != *n) {
    throw GraphError("expected " + std::to_string(*n) + " labels, got " + std::to_string(labels->size()));
  }
  return LabeledGraph(std::move(*labels), edges ? std::move(*edges) : std::vector<Edge>{});
}

std::string serialize_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << "n=" << g.num_vertices() << " labels=";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) out << (v ? "," : "") << g.labels()[v];
  out << " e=";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    out << (i ? "," : "") << g.edges()[i].a << '-' << g.edges()[i].b;
  }
  return out.str();
}

}  // namespace npa
