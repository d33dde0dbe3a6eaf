#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "npa/graph.hpp"

namespace npa {

/// Color histogram keyed by canonical color strings, so histograms from
/// separate calls compare directly.
struct WlHistogram {
  std::map<std::string, std::size_t> counts;
  std::size_t rounds_run = 0;

  friend bool operator==(const WlHistogram& a, const WlHistogram& b) { return a.counts == b.counts; }
};

/// 1-WL color refinement. Parallel edges contribute their multiplicity and a
/// self-loop puts the vertex's own color into its neighbor multiset twice.
/// Stops early once the partition stops splitting.
WlHistogram wl_refine(const LabeledGraph& g, std::size_t rounds);

}  // namespace npa
