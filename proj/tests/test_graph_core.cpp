#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "npa/graph.hpp"
#include "npa/isomorphism.hpp"
#include "npa/tudataset.hpp"
#include "npa/wl.hpp"
#include "support/graph_fixtures.hpp"

using namespace npa;
using npa::testing::cycle;
using npa::testing::path;

TEST_CASE("edge list parsing") {
  auto k2 = parse_edge_list("n=2 labels=1,1 e=0-1");
  CHECK(k2.num_vertices() == 2);
  CHECK(k2.num_edges() == 1);
  CHECK(k2.degree(0) == 1);

  auto loops = parse_edge_list("n=1 labels=5 e=0-0,0-0");
  CHECK(loops.num_edges() == 2);
  CHECK(loops.degree(0) == 4);
  CHECK(loops.multiplicity(0, 0) == 2);
  CHECK(loops.size() == 1 + 2 + 5);

  auto edgeless = parse_edge_list("n=3 labels=1,2,3 e=");
  CHECK(edgeless.num_edges() == 0);
  CHECK(parse_edge_list("n=1 labels=4").num_edges() == 0);

  CHECK_THROWS_AS(parse_edge_list("n=2 labels=1,0 e=0-1"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("n=2 labels=1,1 e=0-2"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("n=2 labels=1 e=0-1"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("n=2 labels=1,1 e=0+1"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("n=x labels=1 e="), GraphError);
  CHECK_THROWS_AS(parse_edge_list("labels=1"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("n=1 labels=1 q=3"), GraphError);
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = npa::testing::random_multigraph(rng, 10, 20, 5);
    const auto text = serialize_edge_list(g);
    const auto back = parse_edge_list(text);
    CHECK(back == g);
    CHECK(serialize_edge_list(back) == text);
    CHECK(are_isomorphic_bruteforce(back, g));
  }
  // Endpoints are canonicalized to a <= b.
  CHECK(serialize_edge_list(parse_edge_list("n=3 labels=1,1,1 e=2-0")) == "n=3 labels=1,1,1 e=0-2");
}

TEST_CASE("brute-force isomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = npa::testing::random_multigraph(rng, 8, 12, 3);
    CHECK(are_isomorphic_bruteforce(g, npa::testing::scrambled(rng, g)));
  }

  auto two_triangles = LabeledGraph(std::vector<Label>(6, 1), {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(are_isomorphic_bruteforce(cycle(6), two_triangles));

  auto parallel = parse_edge_list("n=2 labels=1,1 e=0-1,0-1");
  auto loops = parse_edge_list("n=2 labels=1,1 e=0-0,0-0");
  CHECK_FALSE(are_isomorphic_bruteforce(parallel, loops));

  // Labels matter.
  CHECK_FALSE(are_isomorphic_bruteforce(parse_edge_list("n=2 labels=1,2 e=0-1"), parse_edge_list("n=2 labels=1,1 e=0-1")));
  // Multiplicity matters even with equal degree sequences.
  auto a = parse_edge_list("n=4 labels=1,1,1,1 e=0-1,0-1,2-3,2-3,0-2");
  auto b = parse_edge_list("n=4 labels=1,1,1,1 e=0-1,0-1,2-3,2-3,1-3");
  CHECK(are_isomorphic_bruteforce(a, b));
  auto c = parse_edge_list("n=4 labels=1,1,1,1 e=0-1,1-2,2-3,0-3,0-2,0-2");
  auto d = parse_edge_list("n=4 labels=1,1,1,1 e=0-1,1-2,2-3,0-3,1-3,1-3");
  CHECK(are_isomorphic_bruteforce(c, d));
}

TEST_CASE("oracle guard refuses large ambiguous instances") {
  CHECK_THROWS_AS(are_isomorphic_bruteforce(cycle(20), cycle(20), 12), GuardExceeded);
  // Invariant mismatch is decided without the guard.
  CHECK_FALSE(are_isomorphic_bruteforce(cycle(20), path(20), 12));
}

TEST_CASE("oracle is an equivalence relation on random triples") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    auto g = npa::testing::random_multigraph(rng, 4, 4, 2);
    // Bias toward related graphs so the transitive case is exercised.
    auto h = rng() % 2 ? npa::testing::scrambled(rng, g) : npa::testing::random_multigraph(rng, 4, 4, 2);
    auto k = rng() % 2 ? npa::testing::scrambled(rng, h) : npa::testing::random_multigraph(rng, 4, 4, 2);
    const bool gh = are_isomorphic_bruteforce(g, h), hk = are_isomorphic_bruteforce(h, k);
    CHECK(are_isomorphic_bruteforce(g, g));
    CHECK(gh == are_isomorphic_bruteforce(h, g));
    if (gh && hk) CHECK(are_isomorphic_bruteforce(g, k));
  }
}

TEST_CASE("subgraph containment oracle") {
  auto triangle = cycle(3);
  auto triangle_pendant = parse_edge_list("n=4 labels=1,1,1,1 e=0-1,1-2,0-2,2-3");
  CHECK(contains_subgraph_bruteforce(triangle, triangle_pendant));
  CHECK_FALSE(contains_subgraph_bruteforce(triangle, path(4)));
  CHECK(contains_subgraph_bruteforce(LabeledGraph({1}, {}), path(4)));
  CHECK_FALSE(contains_subgraph_bruteforce(LabeledGraph({2}, {}), path(4)));
  CHECK(contains_subgraph_bruteforce(parse_edge_list("n=2 labels=1,1 e=0-1"), parse_edge_list("n=2 labels=1,1 e=0-1,0-1")));
  CHECK_FALSE(contains_subgraph_bruteforce(parse_edge_list("n=2 labels=1,1 e=0-1,0-1"), path(3)));
}

TEST_CASE("WL refinement") {
  auto single = wl_refine(LabeledGraph({7}, {}), 3);
  CHECK(single.counts.size() == 1);
  CHECK(single.counts.begin()->second == 1);

  auto two_triangles = LabeledGraph(std::vector<Label>(6, 1), {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(wl_refine(cycle(6), 10) == wl_refine(two_triangles, 10));

  // Degree is seen in the first round.
  CHECK_FALSE(wl_refine(path(3), 1) == wl_refine(LabeledGraph({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}}), 1));
  CHECK_FALSE(wl_refine(cycle(4), 3) == wl_refine(LabeledGraph({1, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}), 3));

  // Self-loop counts twice: a looped vertex looks like a 2-cycle vertex.
  auto loop_pair = parse_edge_list("n=2 labels=1,1 e=0-0,1-1");
  auto two_cycle = parse_edge_list("n=2 labels=1,1 e=0-1,0-1");
  CHECK(wl_refine(loop_pair, 5) == wl_refine(two_cycle, 5));

  // Zero rounds: label histogram only.
  CHECK(wl_refine(path(3), 0) == wl_refine(cycle(3), 0));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = npa::testing::random_multigraph(rng, 7, 10, 3);
    auto histogram = wl_refine(g, 4);
    std::size_t total = 0;
    for (const auto& [color, count] : histogram.counts) total += count;
    CHECK(total == g.num_vertices());
    CHECK(histogram == wl_refine(npa::testing::scrambled(rng, g), 4));
  }
}

namespace {

std::filesystem::path write_tu(const std::string& name, const std::vector<std::pair<std::string, std::string>>& files) {
  auto dir = std::filesystem::temp_directory_path() / ("npa_tu_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  for (const auto& [suffix, body] : files) std::ofstream(dir / (name + "_" + suffix + ".txt")) << body;
  return dir;
}

}  // namespace

TEST_CASE("TUDataset loading") {
  // Graph 1: triangle on nodes 1..3; graph 2: edge 4-5. Arcs listed both ways.
  auto dir = write_tu("TOY", {{"A", "1, 2\n2, 1\n2, 3\n3, 2\n1, 3\n3, 1\n4, 5\n5, 4\n"},
                              {"graph_indicator", "1\n1\n1\n2\n2\n"},
                              {"graph_labels", "1\n-1\n"},
                              {"node_labels", "0\n1\n0\n2\n2\n"}});
  auto graphs = load_tudataset(dir, "TOY");
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0].graph.num_vertices() == 3);
  CHECK(graphs[0].graph.num_edges() == 3);
  CHECK(graphs[0].graph.labels() == std::vector<Label>{1, 2, 1});
  CHECK(graphs[0].class_id == 1);
  CHECK(graphs[1].graph.num_edges() == 1);
  CHECK(graphs[1].graph.edges()[0] == Edge{0, 1});
  CHECK(graphs[1].graph.labels() == std::vector<Label>{3, 3});
  CHECK(graphs[1].class_id == -1);

  // Without node labels every vertex gets label 1; disconnected graphs load.
  auto plain = write_tu("PLAIN", {{"A", "1, 2\n2, 1\n"}, {"graph_indicator", "1\n1\n1\n"}, {"graph_labels", "0\n"}});
  auto p = load_tudataset(plain, "PLAIN");
  REQUIRE(p.size() == 1);
  CHECK(p[0].graph.labels() == std::vector<Label>{1, 1, 1});
  CHECK(p[0].graph.num_components() == 2);
}

TEST_CASE("TUDataset errors") {
  auto empty = write_tu("EMPTY", {{"A", ""}, {"graph_indicator", ""}, {"graph_labels", ""}});
  CHECK_THROWS_AS(load_tudataset(empty, "EMPTY"), GraphError);

  auto missing = write_tu("MISSING", {{"A", "1, 2\n"}, {"graph_indicator", "1\n1\n"}});
  CHECK_THROWS_AS(load_tudataset(missing, "MISSING"), GraphError);

  auto cross = write_tu("CROSS", {{"A", "1, 3\n"}, {"graph_indicator", "1\n1\n2\n"}, {"graph_labels", "1\n1\n"}});
  CHECK_THROWS_AS(load_tudataset(cross, "CROSS"), GraphError);

  auto outside = write_tu("OUT", {{"A", "1, 9\n"}, {"graph_indicator", "1\n1\n"}, {"graph_labels", "1\n"}});
  CHECK_THROWS_AS(load_tudataset(outside, "OUT"), GraphError);

  auto bad = write_tu("BAD", {{"A", "1, 2\n2, x\n"}, {"graph_indicator", "1\n1\n"}, {"graph_labels", "1\n"}});
  try {
    load_tudataset(bad, "BAD");
    FAIL("expected a parse error");
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("BAD_A.txt:2") != std::string::npos);
  }
}
