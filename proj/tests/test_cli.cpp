#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int exit_code = -1;
  std::string out;
};

Result run_cli(const std::string& args) {
  const std::string cmd = std::string(NPA_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "npa_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_graph(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p) << text << "\n";
  return p;
}

std::vector<std::string> lines_with_prefix(const std::string& text, const std::string& prefix) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) out.push_back(line);
  }
  return out;
}

// Merge entries of W with their index stripped.
std::multiset<std::string> merge_entries(const std::string& text) {
  std::multiset<std::string> out;
  for (const auto& line : lines_with_prefix(text, "W ")) {
    auto rest = line.substr(line.find(' ', 2) + 1);
    if (rest.rfind("M(", 0) == 0) out.insert(rest);
  }
  return out;
}

}  // namespace

TEST_CASE("encode") {
  auto k2 = write_graph("k2.txt", "n=2 labels=1,1 e=0-1");
  auto r = run_cli("encode " + k2.string() + " --numeric-check");
  CHECK(r.exit_code == 0);
  CHECK(lines_with_prefix(r.out, "W ").size() == 3);
  CHECK(lines_with_prefix(r.out, "C ").size() == 1);
  CHECK(r.out.find("numeric-check evaluated=3 refused=0 collisions=0") != std::string::npos);

  auto bad = write_graph("bad.txt", "n=2 labels=1,0 e=0-1");
  CHECK(run_cli("encode " + bad.string()).exit_code != 0);
  CHECK(run_cli("encode " + (scratch() / "missing.txt").string()).exit_code != 0);
}

TEST_CASE("encode is reproducible from its echoed configuration") {
  auto g = write_graph("c6.txt", "n=6 labels=1,1,1,1,1,1 e=0-1,1-2,2-3,3-4,4-5,0-5");
  auto a = run_cli("encode " + g.string() + " --mode none --sv by-level --seed 17");
  auto b = run_cli("encode " + g.string() + " --mode none --sv by-level --seed 17");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto echo = a.out.substr(0, a.out.find('\n'));
  REQUIRE(echo.rfind("# npa encode ", 0) == 0);
  auto c = run_cli(echo.substr(std::string("# npa ").size()));
  CHECK(c.out == a.out);
  CHECK(run_cli("encode " + g.string() + " --mode none --seed 18").out != a.out);
}

TEST_CASE("encode --variant npba on the NPBA-Hard pair") {
  auto parallel = write_graph("par.txt", "n=2 labels=1,1 e=0-1,0-1");
  auto loops = write_graph("loops.txt", "n=2 labels=1,1 e=0-0,0-0");
  auto a = run_cli("encode " + parallel.string() + " --variant npba");
  auto b = run_cli("encode " + loops.string() + " --variant npba");
  CHECK(merge_entries(a.out) == merge_entries(b.out));
  CHECK(merge_entries(a.out).size() == 2);
  auto x = run_cli("encode " + parallel.string());
  auto y = run_cli("encode " + loops.string());
  CHECK(merge_entries(x.out) != merge_entries(y.out));
}

TEST_CASE("iso exit codes") {
  auto t1 = write_graph("t1.txt", "n=3 labels=1,2,3 e=0-1,1-2,0-2");
  auto t2 = write_graph("t2.txt", "n=3 labels=3,1,2 e=1-2,0-1,0-2");
  CHECK(run_cli("iso " + t1.string() + " " + t2.string()).exit_code == 0);

  auto two_triangles = write_graph("gh1.txt", "n=6 labels=1,1,1,1,1,1 e=0-1,1-2,0-2,3-4,4-5,3-5");
  auto c6 = write_graph("gh2.txt", "n=6 labels=1,1,1,1,1,1 e=0-1,1-2,2-3,3-4,4-5,0-5");
  auto r = run_cli("iso " + two_triangles.string() + " " + c6.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("verdict non-isomorphic exhaustive") != std::string::npos);

  auto gen_dir = scratch() / "rr";
  fs::remove_all(gen_dir);
  REQUIRE(run_cli("gen random-regular --out " + gen_dir.string() + " --count 2 --n 12 --seed 3").exit_code == 0);
  auto s = run_cli("iso " + (gen_dir / "graph_000.txt").string() + " " + (gen_dir / "graph_001.txt").string() + " -K 1");
  CHECK(s.exit_code == 2);
}

TEST_CASE("gen") {
  auto dir = scratch() / "gnn";
  fs::remove_all(dir);
  CHECK(run_cli("gen gnn-hard --out " + dir.string()).exit_code == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".txt";
  CHECK(files == 32);
  CHECK(fs::exists(dir / "manifest.json"));

  auto dir2 = scratch() / "npba";
  fs::remove_all(dir2);
  CHECK(run_cli("gen npba-hard --out " + dir2.string()).exit_code == 0);
  files = 0;
  for (const auto& e : fs::directory_iterator(dir2)) files += e.path().extension() == ".txt";
  CHECK(files == 36);

  CHECK(run_cli("gen bogus --out " + (scratch() / "x").string()).exit_code != 0);
}

TEST_CASE("stats") {
  auto dir = scratch() / "TOY";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "TOY_A.txt") << "1, 2\n2, 1\n2, 3\n3, 2\n1, 3\n3, 1\n4, 5\n5, 4\n";
  std::ofstream(dir / "TOY_graph_indicator.txt") << "1\n1\n1\n2\n2\n";
  std::ofstream(dir / "TOY_graph_labels.txt") << "1\n2\n";
  auto r = run_cli("stats " + dir.string() + " --mode none");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("O(median # edge-orders): none") != std::string::npos);
  auto kv = run_cli("stats " + dir.string() + " --format kv");
  CHECK(kv.out.find("none.mean_levels=") != std::string::npos);
  CHECK(kv.out.find("degs-and-labels.median_log10_edge_orders=") != std::string::npos);
  CHECK(kv.out.find("graphs=2") != std::string::npos);

  auto empty = scratch() / "EMPTY";
  fs::create_directories(empty);
  CHECK(run_cli("stats " + empty.string()).exit_code != 0);
}
