// Command-line driver: encode, iso, stats, gen.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "npa/analysis.hpp"
#include "npa/datasets.hpp"
#include "npa/engine.hpp"
#include "npa/graph.hpp"
#include "npa/isomorphism.hpp"
#include "npa/tudataset.hpp"

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string mode = "degs-and-labels";
  std::string sv = "random";
  std::string variant = "npa";
  std::uint64_t seed = 0;
  std::size_t k = 5;
  bool numeric_check = false;
  std::size_t guard_edges = npa::kDefaultEnumerationEdgeGuard;
  std::string name;
  std::size_t index = 0;
  std::string output;
};

npa::SortConfig sort_config(const Options& o) {
  npa::SortConfig c;
  c.edge_mode = npa::parse_edge_sort_mode(o.mode);
  c.endpoint_mode = npa::parse_endpoint_mode(o.sv);
  c.variant = npa::parse_variant(o.variant);
  c.seed = o.seed;
  return c;
}

std::string config_flags(const Options& o) {
  std::ostringstream s;
  s << "--mode " << o.mode << " --sv " << o.sv << " --variant " << o.variant << " --seed " << o.seed;
  return s.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw npa::GraphError("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Edge-list file, or one graph of a TUDataset directory.
npa::LabeledGraph load_graph(const std::string& path, const Options& o) {
  if (fs::is_directory(path)) {
    const auto name = o.name.empty() ? fs::path(path).filename().string() : o.name;
    auto graphs = npa::load_tudataset(path, name);
    if (o.index >= graphs.size()) throw npa::GraphError("graph index out of range");
    return std::move(graphs[o.index].graph);
  }
  return npa::parse_edge_list(read_file(path));
}

void add_sort_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "edge sort: none, one-deg, two-degs, degs-and-labels")
      ->check(CLI::IsMember({"none", "one-deg", "two-degs", "degs-and-labels"}));
  cmd->add_option("--sv", o.sv, "endpoint order: random, by-level")->check(CLI::IsMember({"random", "by-level"}));
  cmd->add_option("--variant", o.variant, "npa or npba")->check(CLI::IsMember({"npa", "npba"}));
  cmd->add_option("--seed", o.seed, "tie-break seed");
}

int cmd_encode(const std::string& input, const Options& o, std::ostream& out) {
  const auto g = load_graph(input, o);
  npa::TermStore store;
  const auto r = npa::run(store, g, sort_config(o), {.check_invariants = true});
  constexpr std::size_t kMaxTermChars = std::size_t{1} << 24;
  for (const auto& w : r.W) {
    if (store.serialized_size(w.y) > kMaxTermChars) {
      throw std::runtime_error("encoding term too large to print (> 16M characters)");
    }
  }
  out << "# npa encode " << input;
  if (fs::is_directory(input)) out << " --name " << (o.name.empty() ? fs::path(input).filename().string() : o.name) << " --index " << o.index;
  out << " " << config_flags(o) << (o.numeric_check ? " --numeric-check" : "") << "\n";
  out << "graph " << npa::serialize_edge_list(g) << "\n";
  out << npa::serialize_run(store, r);
  if (o.numeric_check) {
    npa::NumericEvaluator eval(store);
    std::map<std::string, npa::TermId> seen;
    std::size_t evaluated = 0, refused = 0, collisions = 0;
    for (const auto& w : r.W) {
      auto y = eval.value(w.y);
      if (!y) {
        ++refused;
        continue;
      }
      ++evaluated;
      const auto key = y->get_str(16) + "/" + w.m1.get_str(16) + "/" + w.m2.get_str(16);
      auto [it, inserted] = seen.emplace(key, w.y);
      if (!inserted && it->second != w.y) ++collisions;
    }
    out << "numeric-check evaluated=" << evaluated << " refused=" << refused << " collisions=" << collisions << "\n";
    if (collisions) return 3;
  }
  return 0;
}

int cmd_iso(const std::string& a, const std::string& b, const Options& o, std::ostream& out) {
  const auto g = load_graph(a, o), h = load_graph(b, o);
  npa::TermStore store;
  const auto v = npa::iso_test(store, g, h, o.k, sort_config(o), o.guard_edges);
  out << "# npa iso " << a << " " << b << " -K " << o.k << " --guard-edges " << o.guard_edges << " " << config_flags(o)
      << "\n";
  out << "verdict " << npa::to_string(v.kind) << (v.exhaustive ? " exhaustive" : " sampled")
      << " samples=" << v.samples_tried << "\n";
  switch (v.kind) {
    case npa::IsoVerdict::Kind::isomorphic: return 0;
    case npa::IsoVerdict::Kind::non_isomorphic: return 1;
    case npa::IsoVerdict::Kind::unknown: return 2;
  }
  return 2;
}

int cmd_stats(const std::string& dir, const Options& o, const std::vector<std::string>& modes, bool kv,
              std::ostream& out) {
  if (!fs::is_directory(dir)) throw npa::GraphError("not a dataset directory: " + dir);
  const auto name = o.name.empty() ? fs::path(dir).filename().string() : o.name;
  const auto data = npa::load_tudataset(dir, name);
  std::vector<npa::LabeledGraph> graphs;
  for (const auto& d : data) graphs.push_back(d.graph);

  out << "# npa stats " << dir << " --name " << name << " --sv " << o.sv << " --variant " << o.variant << " --seed "
      << o.seed;
  for (const auto& m : modes) out << " --mode " << m;
  out << (kv ? " --format kv" : "") << "\n";

  std::vector<std::pair<std::string, npa::DatasetStats>> rows;
  for (const auto& m : modes) {
    auto opts = o;
    opts.mode = m;
    rows.emplace_back(m, npa::dataset_stats(graphs, sort_config(opts)));
  }
  out << std::fixed << std::setprecision(2);
  const auto& first = rows.front().second;
  if (kv) {
    out << "dataset=" << name << "\ngraphs=" << first.graphs << "\navg_nodes=" << first.mean_nodes
        << "\navg_edges=" << first.mean_edges << "\n";
    for (const auto& [m, s] : rows) {
      out << m << ".median_log10_edge_orders=" << s.median_log10_edge_orders << "\n";
      out << m << ".median_log10_orientation_factor=" << s.median_log10_orientation_factor << "\n";
      out << m << ".mean_levels=" << s.mean_levels << "\n";
    }
    return 0;
  }
  out << "Datasets:                          " << name << "\n";
  out << "Avg # nodes:                       " << first.mean_nodes << "\n";
  out << "Avg # edges:                       " << first.mean_edges << "\n";
  for (const auto& [m, s] : rows) {
    out << "O(median # edge-orders): " << std::left << std::setw(16) << m << " 10^" << s.median_log10_edge_orders
        << "\n";
  }
  for (const auto& [m, s] : rows) {
    out << "Avg samples # levels:    " << std::left << std::setw(16) << m << " " << s.mean_levels << "\n";
  }
  return 0;
}

int cmd_gen(npa::SyntheticSpec spec, const std::string& out_dir, std::ostream& out) {
  const auto graphs = npa::generate(spec);
  npa::write_dataset(out_dir, spec, graphs);
  out << "# npa gen " << spec.family << " --out " << out_dir << " --count " << spec.count << " --n " << spec.n
      << " --degree " << spec.degree << " --p " << spec.edge_prob << " --seed " << spec.seed
      << (spec.single_node_loops ? " --single-node" : "") << (spec.simple_only ? " --simple" : "") << "\n";
  out << "wrote " << graphs.size() << " graphs to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Node parsing encoder for labeled multigraphs"};
  app.require_subcommand(1);
  Options o;

  auto* encode = app.add_subcommand("encode", "encode one graph and print W, C, levels and the edge trace");
  std::string encode_input;
  encode->add_option("graph", encode_input, "edge-list file or TUDataset directory")->required();
  add_sort_flags(encode, o);
  encode->add_flag("--numeric-check", o.numeric_check, "cross-check terms against exact numeric values");
  encode->add_option("--name", o.name, "TUDataset prefix (default: directory name)");
  encode->add_option("--index", o.index, "graph index inside a TUDataset directory");
  encode->add_option("-o,--output", o.output, "write to file instead of stdout");

  auto* iso = app.add_subcommand("iso", "test two graphs for isomorphism (exit 0 iso, 1 non-iso, 2 unknown)");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();
  iso->add_option("-K,--budget", o.k, "sampled runs per graph");
  iso->add_option("--guard-edges", o.guard_edges, "exhaustive enumeration up to this many edges");
  add_sort_flags(iso, o);
  iso->add_option("--name", o.name);
  iso->add_option("--index", o.index);

  auto* stats = app.add_subcommand("stats", "edge-order and levels statistics of a TUDataset directory");
  std::string stats_dir;
  std::vector<std::string> stats_modes;
  std::string format = "table";
  stats->add_option("dataset", stats_dir)->required();
  stats->add_option("--mode", stats_modes, "edge sort mode(s); default all four")
      ->check(CLI::IsMember({"none", "one-deg", "two-degs", "degs-and-labels"}));
  stats->add_option("--sv", o.sv)->check(CLI::IsMember({"random", "by-level"}));
  stats->add_option("--variant", o.variant)->check(CLI::IsMember({"npa", "npba"}));
  stats->add_option("--seed", o.seed);
  stats->add_option("--name", o.name);
  stats->add_option("--format", format)->check(CLI::IsMember({"table", "kv"}));
  stats->add_option("-o,--output", o.output);

  auto* gen = app.add_subcommand("gen", "generate a synthetic dataset");
  std::string family, out_dir;
  npa::SyntheticSpec overrides;
  gen->add_option("family", family, "gnn-hard, npba-hard, erdos, erdos-labels, random-regular")
      ->required()
      ->check(CLI::IsMember({"gnn-hard", "npba-hard", "erdos", "erdos-labels", "random-regular"}));
  gen->add_option("--out", out_dir)->required();
  auto* count_opt = gen->add_option("--count", overrides.count);
  auto* n_opt = gen->add_option("--n", overrides.n);
  auto* degree_opt = gen->add_option("--degree", overrides.degree);
  auto* p_opt = gen->add_option("--p", overrides.edge_prob);
  gen->add_option("--seed", overrides.seed);
  gen->add_flag("--single-node", overrides.single_node_loops, "npba-hard class 2 without the isolated vertex");
  gen->add_flag("--simple", overrides.simple_only, "random-regular: reject loops and parallel edges");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.output.empty()) {
      file.open(o.output);
      if (!file) throw std::runtime_error("cannot write " + o.output);
      out = &file;
    }
    if (*encode) return cmd_encode(encode_input, o, *out);
    if (*iso) return cmd_iso(iso_a, iso_b, o, *out);
    if (*stats) {
      if (stats_modes.empty()) stats_modes = {"degs-and-labels", "two-degs", "one-deg", "none"};
      return cmd_stats(stats_dir, o, stats_modes, format == "kv", *out);
    }
    if (*gen) {
      auto spec = npa::default_spec(family);
      if (*count_opt) spec.count = overrides.count;
      if (*n_opt) spec.n = overrides.n;
      if (*degree_opt) spec.degree = overrides.degree;
      if (*p_opt) spec.edge_prob = overrides.edge_prob;
      spec.seed = overrides.seed;
      spec.single_node_loops = overrides.single_node_loops;
      spec.simple_only = overrides.simple_only;
      return cmd_gen(spec, out_dir, *out);
    }
  } catch (const std::exception& e) {
    std::cerr << "npa: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
