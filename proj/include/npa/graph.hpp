#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace npa {

using Vertex = std::uint32_t;
using Label = std::uint32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge; a == b is a self-loop. Stored with a <= b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  bool is_loop() const { return a == b; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with positive node labels. Parallel edges and
/// self-loops are allowed. A self-loop adds 2 to the degree of its vertex.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Throws GraphError if a label is 0 or an endpoint is out of range.
  LabeledGraph(std::vector<Label> labels, std::vector<Edge> edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Label label(Vertex v) const { return labels_[v]; }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }

  Label max_label() const;
  /// n + m + max label.
  std::size_t size() const { return num_vertices() + num_edges() + max_label(); }

  /// Edge multiplicity between u and v; for u == v the number of loops.
  std::size_t multiplicity(Vertex u, Vertex v) const;

  std::size_t num_components() const;

  /// Relabels vertices so that v becomes perm[v]. Edge order is preserved.
  LabeledGraph permuted(std::span<const Vertex> perm) const;

  /// Stable 64-bit fingerprint of the exact representation (numbering and
  /// edge order included).
  std::uint64_t fingerprint() const;

  friend bool operator==(const LabeledGraph& x, const LabeledGraph& y) {
    return x.labels_ == y.labels_ && x.edges_ == y.edges_;
  }

 private:
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
};

struct ClassifiedGraph {
  LabeledGraph graph;
  int class_id = 0;
};

/// Edge-list text: `n=<int> labels=<l0>,...,<l{n-1}> e=<a>-<b>[,<a>-<b>...]`.
LabeledGraph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const LabeledGraph& g);

}  // namespace npa
