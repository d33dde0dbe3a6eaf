#include "npa/tudataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

namespace npa {
namespace {

struct LineReader {
  std::filesystem::path path;
  std::ifstream in;
  std::size_t line_no = 0;

  explicit LineReader(std::filesystem::path p) : path(std::move(p)), in(path) {
    if (!in) throw GraphError("cannot open " + path.string());
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw GraphError(path.filename().string() + ":" + std::to_string(line_no) + ": " + msg);
  }

  // Integer tokens of the next non-blank line; false at EOF.
  bool next(std::vector<long long>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      tokens.clear();
      std::size_t pos = 0;
      bool any = false;
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',' || line[pos] == '\r')) {
          ++pos;
        }
        if (pos >= line.size()) break;
        auto end = pos;
        while (end < line.size() && line[end] != ',' && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') {
          ++end;
        }
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
        if (ec != std::errc{} || ptr != line.data() + end) {
          fail("non-integer token '" + line.substr(pos, end - pos) + "'");
        }
        tokens.push_back(value);
        any = true;
        pos = end;
      }
      if (any) return true;
    }
    return false;
  }
};

std::vector<long long> read_column(const std::filesystem::path& path) {
  LineReader reader(path);
  std::vector<long long> values, tokens;
  while (reader.next(tokens)) {
    if (tokens.size() != 1) reader.fail("expected one value per line");
    values.push_back(tokens[0]);
  }
  return values;
}

}  // namespace

std::vector<ClassifiedGraph> load_tudataset(const std::filesystem::path& directory, const std::string& name) {
  auto file = [&](const std::string& suffix) { return directory / (name + "_" + suffix + ".txt"); };
  for (const auto* mandatory : {"A", "graph_indicator", "graph_labels"}) {
    if (!std::filesystem::exists(file(mandatory))) {
      throw GraphError("missing mandatory file " + file(mandatory).string());
    }
  }

  const auto indicator = read_column(file("graph_indicator"));
  const auto graph_labels = read_column(file("graph_labels"));
  if (indicator.empty()) throw GraphError(file("graph_indicator").string() + ": no vertices");
  const auto num_graphs = graph_labels.size();

  // Global node k (1-based) -> (graph, local index).
  std::vector<std::size_t> graph_of(indicator.size());
  std::vector<Vertex> local(indicator.size());
  std::vector<std::size_t> sizes(num_graphs, 0);
  for (std::size_t k = 0; k < indicator.size(); ++k) {
    const auto gid = indicator[k];
    if (gid < 1 || static_cast<std::size_t>(gid) > num_graphs) {
      throw GraphError(file("graph_indicator").filename().string() + ":" + std::to_string(k + 1) +
                       ": graph id " + std::to_string(gid) + " outside 1.." + std::to_string(num_graphs));
    }
    graph_of[k] = static_cast<std::size_t>(gid - 1);
    local[k] = static_cast<Vertex>(sizes[graph_of[k]]++);
  }

  std::vector<std::vector<Label>> labels(num_graphs);
  for (std::size_t g = 0; g < num_graphs; ++g) labels[g].assign(sizes[g], 1);
  if (std::filesystem::exists(file("node_labels"))) {
    const auto raw = read_column(file("node_labels"));
    if (raw.size() != indicator.size()) {
      throw GraphError(file("node_labels").string() + ": expected " + std::to_string(indicator.size()) +
                       " labels, got " + std::to_string(raw.size()));
    }
    const auto min_raw = *std::min_element(raw.begin(), raw.end());
    const long long shift = min_raw < 1 ? 1 - min_raw : 0;
    for (std::size_t k = 0; k < raw.size(); ++k) labels[graph_of[k]][local[k]] = static_cast<Label>(raw[k] + shift);
  }

  // Arc counts per unordered pair; a symmetric pair of arcs is one edge.
  std::vector<std::map<std::pair<Vertex, Vertex>, std::pair<std::size_t, std::size_t>>> arcs(num_graphs);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> first_seen(num_graphs);
  {
    LineReader reader(file("A"));
    std::vector<long long> tokens;
    while (reader.next(tokens)) {
      if (tokens.size() != 2) reader.fail("expected an index pair");
      for (auto t : tokens) {
        if (t < 1 || static_cast<std::size_t>(t) > indicator.size()) {
          reader.fail("vertex " + std::to_string(t) + " does not exist");
        }
      }
      const auto u = static_cast<std::size_t>(tokens[0] - 1), v = static_cast<std::size_t>(tokens[1] - 1);
      if (graph_of[u] != graph_of[v]) reader.fail("edge joins vertices of different graphs");
      auto a = local[u], b = local[v];
      const bool forward = a <= b;
      if (a > b) std::swap(a, b);
      auto [it, inserted] = arcs[graph_of[u]].try_emplace({a, b}, 0, 0);
      if (inserted) first_seen[graph_of[u]].emplace_back(a, b);
      (forward ? it->second.first : it->second.second) += 1;
    }
  }

  std::vector<ClassifiedGraph> out;
  out.reserve(num_graphs);
  for (std::size_t g = 0; g < num_graphs; ++g) {
    std::vector<Edge> edges;
    for (const auto& key : first_seen[g]) {
      const auto [fwd, bwd] = arcs[g].at(key);
      const auto count = key.first == key.second ? fwd + bwd : std::max(fwd, bwd);
      for (std::size_t c = 0; c < count; ++c) edges.push_back({key.first, key.second});
    }
    out.push_back({LabeledGraph(std::move(labels[g]), std::move(edges)), static_cast<int>(graph_labels[g])});
  }
  return out;
}

}  // namespace npa
