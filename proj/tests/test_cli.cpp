#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "kcover/cli.hpp"
#include "kcover/graph.hpp"

namespace fs = std::filesystem;
using kcover::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome kcover_run(std::vector<std::string> args) {
  args.insert(args.begin(), "kcover");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("kcover_cli_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("cover command") {
  TempDir dir;
  const auto k4 = dir.write("k4.txt", kcover::serialize_graph(kcover::complete_graph(4)));
  const auto c4 = dir.write("c4.txt", "4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n");

  SUBCASE("improved cycles on K4") {
    const auto r = kcover_run({"cover", k4, "--k", "3", "--kind", "cycle", "--algorithm", "improved"});
    CHECK(r.code == kcover::cli::ok);
    CHECK(has_line(r.out, "certified=true"));
    CHECK(has_line(r.out, "lp_objective=2"));
    CHECK(has_line(r.out, "ratio_bound=5/2"));
    CHECK(has_line(r.out, "algorithm=cycle-odd"));
  }
  SUBCASE("even k with improved cycles is a usage error") {
    const auto r = kcover_run({"cover", k4, "--k", "4", "--kind", "cycle", "--algorithm", "improved"});
    CHECK(r.code == kcover::cli::usage_error);
  }
  SUBCASE("triangle-free input") {
    const auto r = kcover_run({"cover", c4, "--k", "3"});
    CHECK(r.code == kcover::cli::ok);
    CHECK(has_line(r.out, "cover="));
    CHECK(has_line(r.out, "cover_weight=0"));
    CHECK(has_line(r.out, "certified=true"));
  }
  SUBCASE("structured output") {
    const auto r = kcover_run({"cover", k4, "--k", "4", "--kind", "clique", "--format", "structured"});
    CHECK(r.code == kcover::cli::ok);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["lp_objective"] == "1");
    CHECK(doc["ratio_bound"] == "6");
    CHECK(doc["certified"] == true);
    CHECK(doc["cover"].is_array());
  }
  SUBCASE("LP dump") {
    const auto dump = (fs::temp_directory_path() / "kcover_cli_dump.lp").string();
    const auto r = kcover_run({"cover", k4, "--k", "3", "--lp-dump", dump});
    CHECK(r.code == kcover::cli::ok);
    std::ifstream in(dump);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().find("s_0_1_2: x0 + x1 + x3 >= 1") != std::string::npos);
    fs::remove(dump);
  }
  SUBCASE("enumeration cap") {
    const auto r = kcover_run({"cover", k4, "--k", "3", "--max-structures", "2"});
    CHECK(r.code == kcover::cli::resource_cap);
  }
  SUBCASE("input errors") {
    const auto bad = dir.write("bad.txt", "3\n0 0 1\n");
    const auto r = kcover_run({"cover", bad, "--k", "3"});
    CHECK(r.code == kcover::cli::input_error);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(kcover_run({"cover", "/nonexistent/graph", "--k", "3"}).code == kcover::cli::input_error);
  }
  SUBCASE("bad flags") {
    CHECK(kcover_run({"cover", k4, "--k", "2"}).code == kcover::cli::usage_error);
    CHECK(kcover_run({"cover", k4, "--k", "3", "--kind", "star"}).code == kcover::cli::usage_error);
    CHECK(kcover_run({}).code == kcover::cli::usage_error);
  }
}

TEST_CASE("exact command") {
  TempDir dir;
  const auto k5 = dir.write("k5.txt", kcover::serialize_graph(kcover::complete_graph(5)));
  const auto tri = dir.write("tri.txt", "3\n0 1 1\n1 2 1\n0 2 1\n");
  auto r = kcover_run({"exact", k5, "--k", "3"});
  CHECK(r.code == kcover::cli::ok);
  CHECK(has_line(r.out, "weight=4"));
  r = kcover_run({"exact", tri, "--k", "3"});
  CHECK(has_line(r.out, "weight=1"));

  const auto k7 = dir.write("k7.txt", kcover::serialize_graph(kcover::complete_graph(7)));
  r = kcover_run({"exact", k7, "--k", "3", "--node-budget", "1"});
  CHECK(r.code == kcover::cli::resource_cap);
  CHECK(has_line(r.out, "status=unsolved"));

  ::setenv("KCOVER_NODE_BUDGET", "1", 1);
  r = kcover_run({"exact", k7, "--k", "3"});
  ::unsetenv("KCOVER_NODE_BUDGET");
  CHECK(r.code == kcover::cli::resource_cap);
}

TEST_CASE("pack command") {
  TempDir dir;
  const auto k7 = dir.write("k7.txt", kcover::serialize_graph(kcover::complete_graph(7)));
  const auto r = kcover_run({"pack", k7, "--k", "3"});
  CHECK(r.code == kcover::cli::ok);
  CHECK(has_line(r.out, "count=7"));
  CHECK(has_line(r.out, "edges_used=21"));
}

TEST_CASE("ratio-study command") {
  const auto r = kcover_run({"ratio-study", "--n-range", "3..7", "--k", "3", "--kind", "clique"});
  CHECK(r.code == kcover::cli::ok);
  CHECK(has_line(r.out, "3\t1\t1\t1\t1/3\tok"));
  CHECK(has_line(r.out, "4\t2\t1\t2\t1/3\tok"));
  CHECK(has_line(r.out, "7\t9\t7\t9/7\t3/7\tok"));

  const auto s = kcover_run({"ratio-study", "--n-range", "5", "--k", "3", "--format", "structured"});
  const auto doc = nlohmann::json::parse(s.out);
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["tau"] == 4);
  CHECK(doc["rows"][0]["nu"] == 2);

  CHECK(kcover_run({"ratio-study", "--n-range", "9..3", "--k", "3"}).code == kcover::cli::usage_error);
  CHECK(kcover_run({"ratio-study", "--n-range", "x", "--k", "3"}).code == kcover::cli::usage_error);
  const auto u = kcover_run({"ratio-study", "--n-range", "7", "--k", "3", "--node-budget", "1"});
  CHECK(u.code == kcover::cli::resource_cap);
  CHECK(has_line(u.out, "7\tunsolved"));
}

TEST_CASE("verify command") {
  TempDir dir;
  const auto tri = dir.write("tri.txt", "3\n0 1 1\n1 2 1\n0 2 1\n");
  const auto k4 = dir.write("k4.txt", kcover::serialize_graph(kcover::complete_graph(4)));
  const auto c4 = dir.write("c4.txt", "4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n");

  auto r = kcover_run({"verify", tri, dir.write("one.txt", "3\n0 1\n"), "--k", "3"});
  CHECK(r.code == kcover::cli::ok);
  CHECK(has_line(r.out, "feasible=true"));

  r = kcover_run({"verify", k4, dir.write("adj.txt", "4\n0 1\n0 2\n"), "--k", "3"});
  CHECK(r.code == kcover::cli::rejected);
  CHECK(has_line(r.out, "feasible=false"));
  CHECK(has_line(r.out, "surviving=1 2 3"));

  r = kcover_run({"verify", c4, dir.write("empty.txt", "4\n"), "--k", "3"});
  CHECK(r.code == kcover::cli::ok);

  r = kcover_run({"verify", c4, dir.write("foreign.txt", "4\n0 2\n"), "--k", "3"});
  CHECK(r.code == kcover::cli::input_error);
  CHECK(r.err.find("0-2") != std::string::npos);
}

TEST_CASE("commands are byte-identical across runs") {
  TempDir dir;
  const auto g = dir.write("g.txt", "6\n0 1 3\n0 2 1\n1 2 4\n1 3 2\n2 3 5\n2 4 1\n3 4 2\n3 5 7\n4 5 1\n0 5 2\n");
  const std::vector<std::vector<std::string>> commands = {
      {"cover", g, "--k", "3", "--algorithm", "improved"},
      {"cover", g, "--k", "3", "--kind", "clique", "--format", "structured"},
      {"exact", g, "--k", "3"},
      {"pack", g, "--k", "3"},
      {"ratio-study", "--n-range", "3..6", "--k", "3"},
      {"verify", g, dir.write("c.txt", "6\n1 2\n"), "--k", "3"},
  };
  for (const auto& cmd : commands) {
    const auto a = kcover_run(cmd);
    const auto b = kcover_run(cmd);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
