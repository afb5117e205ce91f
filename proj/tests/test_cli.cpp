#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsc/cli.hpp"

using namespace gsc;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("springer-table emits the expected json") {
  RunResult r = run({"springer-table", "--n", "4", "--p", "5", "--d", "2", "--j", "1", "--frob",
                     "nonsplit"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["datum"]["n"] == 4);
  CHECK(doc["datum"]["p"] == 5);
  CHECK(doc["datum"]["d"] == 2);
  CHECK(doc["datum"]["j"] == 1);
  CHECK(doc["datum"]["frob"] == "nonsplit");
  REQUIRE(doc["entries"].size() == 2);
  CHECK(doc["entries"][0]["mu"] == "2");
  CHECK(doc["entries"][0]["lambda"] == "4");
  CHECK(doc["entries"][0]["big_m"] == 4);
  CHECK(doc["entries"][0]["rho_index"] == 2);
  CHECK(doc["entries"][0]["m"] == 0);
  CHECK(doc["entries"][0]["dim_py"] == 0);
  CHECK(doc["entries"][1]["lambda"] == "2,2");
  CHECK(doc["entries"][1]["big_m"] == 2);
  CHECK(doc["entries"][1]["rho_index"] == 1);
  CHECK(doc["entries"][1]["m"] == 4);
}

TEST_CASE("springer-table tsv format") {
  RunResult r = run({"springer-table", "--n", "4", "--p", "5", "--format", "tsv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "mu\tlambda\tbig_m\trho_index\tm\tdim_py");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 5);  // partitions of 4 for the trivial datum
}

TEST_CASE("rep split golden matrix") {
  RunResult r = run({"rep", "--kind", "split", "--lambda", "2,1", "--q", "3"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["kind"] == "split");
  CHECK(doc["lambda"] == "2,1");
  CHECK(doc["q"] == 3);
  json expect = json::array({json::array({"0", "0", "0"}), json::array({"1", "0", "0"}),
                             json::array({"0", "0", "0"})});
  CHECK(doc["matrix"] == expect);
  CHECK(doc["strings"].size() == 2);
}

TEST_CASE("rep twisted runs over the quadratic extension") {
  RunResult r = run({"rep", "--kind", "twisted", "--lambda", "2,2", "--q", "3"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["kind"] == "twisted");
  CHECK(doc["q"] == 9);  // representative lives over F_{q^2}
  CHECK(doc["matrix"].size() == 4);

  RunResult rcut = run({"rep", "--kind", "twisted-cut", "--lambda", "4", "--d", "2", "--q", "5"});
  REQUIRE(rcut.code == 0);
  CHECK(json::parse(rcut.out)["kind"] == "twisted-cut");

  RunResult ry0 = run({"rep", "--kind", "levi-regular", "--n", "4", "--d", "2", "--q", "3"});
  REQUIRE(ry0.code == 0);
  CHECK(json::parse(ry0.out)["kind"] == "levi-regular");
}

TEST_CASE("gamma golden values") {
  RunResult r = run({"gamma", "--lambda", "2", "--d", "2", "--j", "1", "--q", "3", "--frob",
                     "nonsplit"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["gamma"]["k"] == 0);
  CHECK(doc["gamma"]["m"] == 1);
  CHECK(doc["m"] == 0);
  CHECK(doc["checks"]["alpha_invariance"] == true);
  CHECK(doc["checks"]["oracle_match"] == true);

  RunResult r2 = run({"gamma", "--lambda", "2,2", "--d", "2", "--j", "1", "--q", "3", "--frob",
                      "nonsplit"});
  REQUIRE(r2.code == 0);
  json doc2 = json::parse(r2.out);
  CHECK(doc2["gamma"]["k"] == 1);
  CHECK(doc2["gamma"]["m"] == 2);
  CHECK(doc2["c1_index"] == 1);
  CHECK(doc2["m"] == 4);
}

TEST_CASE("yfun golden tsv") {
  RunResult r = run({"yfun", "--n", "2", "--q", "3", "--d", "2", "--j", "1", "--frob", "nonsplit"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "lambda\trho_index\tclass_rep\tvalue_num\tvalue_den\n"
        "2\t1\t0\t0\t1\n"
        "2\t1\t1\t1\t2\n");
}

TEST_CASE("oracle centralizer check passes") {
  RunResult r = run({"oracle", "--check", "centralizer", "--lambda", "2", "--q", "3"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["check"] == "centralizer");
  CHECK(doc["expected"] == 6);
  CHECK(doc["observed"] == 6);
  CHECK(doc["pass"] == true);
}

TEST_CASE("oracle classes check passes both twists") {
  for (std::string frob : {"split", "nonsplit"}) {
    RunResult r = run({"oracle", "--check", "classes", "--lambda", "2", "--q", "3", "--frob",
                       frob});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["expected"] == 2);
  }
}

TEST_CASE("oracle py-points check interpolates the fiber count") {
  RunResult r = run({"oracle", "--check", "py-points", "--lambda", "2,1", "--d", "1", "--p", "3"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["expected"] == 1);
  CHECK(doc["coeffs"] == json::array({1, 2}));  // 2q + 1
  CHECK(doc["points"][0]["q"] == 3);
  CHECK(doc["points"][0]["count"] == 7);
}

TEST_CASE("oracle c1 check compares formula and direct computation") {
  RunResult r = run({"oracle", "--check", "c1", "--lambda", "2,2", "--d", "2", "--q", "3"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["expected"] == 1);
  CHECK(doc["observed"] == 1);
  CHECK(doc["pass"] == true);
}

TEST_CASE("exit codes: usage and precondition errors give 1") {
  CHECK(run({"bogus-subcommand"}).code == 1);
  CHECK(run({"gamma", "--q", "3"}).code == 1);  // missing --lambda
  RunResult gate = run({"gamma", "--lambda", "3,3", "--d", "3", "--j", "1", "--q", "3", "--frob",
                        "nonsplit"});
  CHECK(gate.code == 1);
  CHECK(gate.err.find("d must divide") != std::string::npos);
  CHECK(run({"springer-table", "--n", "4", "--p", "6"}).code == 1);  // p not prime
  CHECK(run({}).code == 1);  // no subcommand: help on stderr
}

TEST_CASE("exit codes: exhausted budgets give 2") {
  RunResult r = run({"oracle", "--check", "centralizer", "--lambda", "2", "--q", "3", "--budget",
                     "10"});
  CHECK(r.code == 2);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("verify runs its whole checklist") {
  RunResult r = run({"verify"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(r.out.find("check failed") == std::string::npos);
}

TEST_CASE("help exits zero") {
  RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("springer-table") != std::string::npos);
  CHECK(run({"springer-table", "--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args = {"springer-table", "--n", "6", "--p", "5", "--d", "2", "--j",
                                   "1"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> args2 = {"gamma", "--lambda", "2,2", "--d", "2", "--j", "1", "--q",
                                    "3", "--frob", "nonsplit"};
  CHECK(run(args2).out == run(args2).out);
}

TEST_CASE("--out writes the same bytes to a file") {
  const char* path = "cli_out_test.tmp";
  RunResult direct = run({"yfun", "--n", "2", "--q", "3", "--d", "2", "--j", "1", "--frob",
                          "nonsplit"});
  RunResult filed = run({"yfun", "--n", "2", "--q", "3", "--d", "2", "--j", "1", "--frob",
                         "nonsplit", "--out", path});
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.out);
  std::remove(path);
}
