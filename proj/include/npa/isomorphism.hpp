#pragma once

#include <cstddef>
#include <stdexcept>

#include "npa/graph.hpp"

namespace npa {

/// Raised when an exhaustive routine is asked to handle an instance beyond
/// its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultIsoVertexGuard = 12;

/// Exact isomorphism test by backtracking over label/degree-compatible
/// assignments. Cheap invariants (sizes, label multiset, degree sequence,
/// component count) are checked first and decide any size; only the
/// backtracking phase is guarded by max_vertices.
bool are_isomorphic_bruteforce(const LabeledGraph& g, const LabeledGraph& h,
                               std::size_t max_vertices = kDefaultIsoVertexGuard);

/// True iff there is an injective, label-preserving map f: V(pattern) -> V(host)
/// with mult(u, v) <= mult(f(u), f(v)) for all vertex pairs (non-induced
/// subgraph isomorphism on multigraphs).
bool contains_subgraph_bruteforce(const LabeledGraph& pattern, const LabeledGraph& host,
                                  std::size_t max_vertices = kDefaultIsoVertexGuard);

}  // namespace npa
