#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pmvc/cli.hpp"
#include "pmvc/oracle.hpp"
#include "pmvc/reductions.hpp"

using namespace pmvc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run pmvc_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(PMVC_FIXTURES) + "/" + name; }

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("pmvc_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("solve-sym dp on K2") {
  const Run r = pmvc_run({"solve-sym", "--graph", fixture("k2.graph.json"), "--constraint",
                          fixture("any.constraint.json"), "--method", "dp"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = r.json();
  CHECK(j["answer"] == "yes");
  CHECK(j["verified"] == true);
  CHECK(j["certificate"] == nlohmann::json::array({0}));
  CHECK(j["trials"] == 0);
}

TEST_CASE("solve-sym pit on a triangle") {
  const Run r = pmvc_run({"solve-sym", "--graph", fixture("triangle.graph.json"), "--constraint",
                          fixture("any.constraint.json"), "--method", "pit", "--seed", "1"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.json()["answer"] == "no");
  CHECK_FALSE(r.json().contains("certificate"));
}

TEST_CASE("every method agrees on the alternating 4-cycle") {
  for (const std::string method : {"pit", "dp", "planar", "oracle", "explicit"}) {
    CAPTURE(method);
    std::vector<std::string> args{"solve-sym", "--graph", fixture("c4.graph.json"), "--constraint",
                                  fixture("red4.constraint.json"), "--method", method, "--seed", "5"};
    if (method == "planar") {
      args.push_back("--embedding");
      args.push_back(fixture("c4.embedding.json"));
    }
    const Run r = pmvc_run(args);
    REQUIRE(r.code == cli::kExitOk);
    const auto j = r.json();
    CHECK(j["answer"] == "yes");
    CHECK(j["verified"] == true);
    CHECK(j["method"] == method);
    // red on every vertex: the two red edges
    CHECK(j["certificate"] == nlohmann::json::array({0, 2}));
  }
}

TEST_CASE("the cancelling 4-cycle instance is never verified") {
  for (const std::string method : {"pit", "planar"}) {
    std::vector<std::string> args{"solve-sym", "--graph", fixture("c4.graph.json"), "--constraint",
                                  fixture("red2.constraint.json"), "--method", method};
    if (method == "planar") {
      args.push_back("--embedding");
      args.push_back(fixture("c4.embedding.json"));
    }
    const Run r = pmvc_run(args);
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.json()["answer"] != "yes");
    CHECK(r.json()["verified"] == false);
  }
}

TEST_CASE("no-verify downgrades positives") {
  const Run r = pmvc_run({"solve-sym", "--graph", fixture("k2.graph.json"), "--constraint",
                          fixture("any.constraint.json"), "--method", "pit", "--no-verify"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.json()["answer"] == "unknown");
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  for (const std::string method : {"pit", "planar"}) {
    std::vector<std::string> args{"solve-sym", "--graph", fixture("c4.graph.json"), "--constraint",
                                  fixture("any.constraint.json"), "--method", method, "--seed", "77"};
    if (method == "planar") {
      args.push_back("--embedding");
      args.push_back(fixture("c4.embedding.json"));
    }
    const Run a = pmvc_run(args), b = pmvc_run(args);
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
  }
  const std::vector<std::string> ext{"extract-sym", "--graph", fixture("c4.graph.json"), "--constraint",
                                     fixture("any.constraint.json"), "--seed", "3"};
  CHECK(pmvc_run(ext).out == pmvc_run(ext).out);
}

TEST_CASE("extract-sym") {
  const Run ok = pmvc_run({"extract-sym", "--graph", fixture("c4.graph.json"), "--constraint",
                           fixture("red4.constraint.json")});
  REQUIRE(ok.code == cli::kExitOk);
  CHECK(ok.json()["certificate"] == nlohmann::json::array({0, 2}));
  const Run none = pmvc_run({"extract-sym", "--graph", fixture("triangle.graph.json"), "--constraint",
                             fixture("any.constraint.json"), "--rounds", "2"});
  CHECK(none.code == cli::kExitResource);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(pmvc_run({}).code == cli::kExitInput);
  CHECK(pmvc_run({"solve-sym", "--graph", fixture("k2.graph.json")}).code == cli::kExitInput);
  CHECK(pmvc_run({"solve-sym", "--graph", fixture("k2.graph.json"), "--constraint", fixture("any.constraint.json"),
                  "--method", "magic"})
            .code == cli::kExitInput);
  CHECK(pmvc_run({"solve-sym", "--graph", "/nonexistent.json", "--constraint", fixture("any.constraint.json"),
                  "--method", "dp"})
            .code == cli::kExitInput);
  CHECK(pmvc_run({"solve-sym", "--graph", fixture("any.constraint.json"), "--constraint",
                  fixture("any.constraint.json"), "--method", "dp"})
            .code == cli::kExitInput);
  const Run planar = pmvc_run({"solve-sym", "--graph", fixture("k2.graph.json"), "--constraint",
                               fixture("any.constraint.json"), "--method", "planar"});
  CHECK(planar.code == cli::kExitInput);
  CHECK(planar.err.find("--embedding") != std::string::npos);
}

TEST_CASE("reduce sat3 writes a decidable instance") {
  const fs::path dir = scratch_dir("sat3");
  const std::string prefix = (dir / "small").string();
  const Run r = pmvc_run({"reduce", "sat3", "--cnf", fixture("small.cnf"), "--out-prefix", prefix});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.json()["vertices"] == 12);
  const Run solved = pmvc_run({"solve-dd", "--graph", prefix + ".graph.json", "--dd", prefix + ".dd.json",
                               "--method", "oracle"});
  REQUIRE(solved.code == cli::kExitOk);
  CHECK(solved.json()["answer"] == "yes");
  const Graph g = parse_graph(slurp(prefix + ".graph.json"));
  const GadgetMap map = gadget_map_from_json(nlohmann::json::parse(slurp(prefix + ".gadgets.json")));
  PerfectMatching pm;
  pm.edge_ids = solved.json()["certificate"].get<std::vector<int>>();
  const auto s = decode_assignment(pm, map, g);
  CHECK(evaluate_cnf(parse_dimacs(slurp(fixture("small.cnf"))), s));
}

TEST_CASE("reduce xpm and from-circuit") {
  const fs::path dir = scratch_dir("xpm");
  const std::string prefix = (dir / "c4").string();
  REQUIRE(pmvc_run({"reduce", "xpm", "--graph", fixture("k2.graph.json"), "--k", "1", "--out-prefix", prefix}).code ==
          cli::kExitInput);  // one color only
  const std::string circ = (dir / "seven").string();
  const Run r = pmvc_run({"from-circuit", "--circuit", fixture("seven.circuit.json"), "--state", "ghz",
                          "--out-prefix", circ});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.json()["vertices"] == 4);
  CHECK(r.json()["edges"] == 7);
  CHECK(fs::exists(circ + ".constraint.json"));
  const Run xpm = pmvc_run({"reduce", "xpm", "--graph", circ + ".graph.json", "--k", "1", "--out-prefix", prefix});
  CHECK(xpm.code == cli::kExitInput);  // crystal III has mixed endpoint modes
  const Run bad = pmvc_run({"from-circuit", "--circuit", fixture("seven.circuit.json"), "--state", "dicke:9",
                            "--out-prefix", circ});
  CHECK(bad.code == cli::kExitInput);
}

TEST_CASE("reduce xpm on a red/blue graph") {
  const fs::path dir = scratch_dir("xpm2");
  const std::string prefix = (dir / "c4").string();
  const Run r = pmvc_run({"reduce", "xpm", "--graph", fixture("c4.graph.json"), "--k", "2", "--out-prefix", prefix});
  REQUIRE(r.code == cli::kExitOk);
  const Run solved = pmvc_run({"solve-sym", "--graph", prefix + ".graph.json", "--constraint",
                               prefix + ".constraint.json", "--method", "oracle"});
  CHECK(solved.json()["answer"] == "yes");
}

TEST_CASE("oracle enumerate") {
  const Run r = pmvc_run({"oracle", "enumerate", "--graph", fixture("c4.graph.json")});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = r.json();
  CHECK(j["count"] == 2);
  CHECK(j["matchings"][0]["edges"] == nlohmann::json::array({0, 2}));
  CHECK(j["matchings"][0]["coloring"] == nlohmann::json::array({1, 1, 1, 1}));
  CHECK(j["matchings"][1]["coloring"] == nlohmann::json::array({2, 2, 2, 2}));
}
