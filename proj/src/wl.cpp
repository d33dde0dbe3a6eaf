#include "npa/wl.hpp"

#include <algorithm>
#include <vector>

namespace npa {

WlHistogram wl_refine(const LabeledGraph& g, std::size_t rounds) {
  const auto n = g.num_vertices();
  std::vector<std::vector<Vertex>> neighbors(n);
  for (const auto& e : g.edges()) {
    neighbors[e.a].push_back(e.b);
    neighbors[e.b].push_back(e.a);
  }

  // Per-call table: color id -> canonical string.
  std::vector<std::string> names;
  std::map<std::string, std::size_t> table;
  auto intern = [&](std::string name) {
    auto [it, inserted] = table.emplace(name, names.size());
    if (inserted) names.push_back(std::move(name));
    return it->second;
  };

  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = intern(std::to_string(g.label(v)));
  auto distinct = [](std::vector<std::size_t> c) {
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  };

  std::size_t classes = distinct(color);
  std::size_t done = 0;
  for (; done < rounds; ++done) {
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::string_view> nbr;
      nbr.reserve(neighbors[v].size());
      for (auto w : neighbors[v]) nbr.push_back(names[color[w]]);
      std::sort(nbr.begin(), nbr.end());
      std::string name = "(" + names[color[v]] + ";";
      for (std::size_t i = 0; i < nbr.size(); ++i) {
        if (i) name += ',';
        name += nbr[i];
      }
      name += ')';
      next[v] = intern(std::move(name));
    }
    const auto next_classes = distinct(next);
    color = std::move(next);
    if (next_classes == classes) {
      ++done;
      break;
    }
    classes = next_classes;
  }

  WlHistogram hist;
  hist.rounds_run = done;
  for (Vertex v = 0; v < n; ++v) ++hist.counts[names[color[v]]];
  return hist;
}

}  // namespace npa
