#include "catch_amalgamated.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "altknot/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "altknot");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = altknot::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("charpoly", "[cli]") {
  auto r = run({"charpoly", "--gauss", "O1 U2 O3 U1 O2 U3"});
  CHECK(r.status == 0);
  CHECK(r.out == "x^3 - 3*x - 2\n");
  r = run({"charpoly", "--spec", "torus:2"});
  CHECK(r.out == "x^2 - 4\n");
  r = run({"charpoly", "--gauss", ""});
  CHECK(r.out == "0\n");
  r = run({"charpoly", "--spec", "torus:3", "--format", "json"});
  CHECK(r.out.find("\"polynomial\":\"x^3 - 3*x - 2\"") != std::string::npos);
}

TEST_CASE("conway", "[cli]") {
  CHECK(run({"conway", "--spec", "rational:4,3"}).out == "conway=13 crossings=7\n");
  CHECK(run({"conway", "--spec", "union(torus:3,torus:3)"}).out == "conway=0 crossings=6\n");
  CHECK(run({"conway", "--spec", "unknot"}).out == "conway=1 crossings=0\n");
  CHECK(run({"conway", "--gauss", "O1 U2 ; O2 U1", "--format", "json"}).out == "{\"conway\":2,\"crossings\":2}\n");
}

TEST_CASE("decompose and components", "[cli]") {
  auto r = run({"decompose", "--gauss", "O1 U2 O3 U1 O2 U3"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("count=1\n", 0) == 0);
  CHECK(run({"components", "--spec", "torus:4"}).out == "components=2\n");
  CHECK(run({"components", "--gauss", "O1 U2 O3 U1 O2 U3"}).out == "components=1\n");
  CHECK(run({"components", "--spec", "unknot"}).out == "components=1\n");
  r = run({"components", "--gauss", "O1 U2 ; O2 U1", "--format", "json"});
  CHECK(r.out.find("\"components\":2") != std::string::npos);
  CHECK(r.out.find("\"cycles\"") != std::string::npos);
}

TEST_CASE("family", "[cli]") {
  CHECK(run({"family", "poly", "--name", "TwoRibbon", "--params", "1,1"}).out == "x^2 - 4\n");
  auto r = run({"family", "poly", "--name", "ThreeRibbonMixed", "--params", "2,2,1", "--format", "json"});
  CHECK(r.out.find("\"conway\":8") != std::string::npos);
  CHECK(r.out.find("\"crossings\":5") != std::string::npos);
  r = run({"family", "sweep", "--name", "CyclicTorus", "--max", "3", "--format", "csv"});
  CHECK(r.out == "params,polynomial,conway,crossings\n\"1\",x - 2,1,1\n\"2\",x^2 - 4,2,2\n\"3\",x^3 - 3*x - 2,3,3\n");
  r = run({"family", "sweep", "--name", "TwoRibbon", "--max", "2"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  CHECK(run({"family", "poly", "--name", "Nope", "--params", "1"}).status == 2);
  CHECK(run({"family", "poly", "--name", "TwoRibbon", "--params", "1"}).status == 2);
}

TEST_CASE("catalog and bracket", "[cli]") {
  auto r = run({"catalog", "--ribbons", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("+a1*a2*a3 +a1 +a3") != std::string::npos);
  r = run({"catalog", "--ribbons", "4", "--json"});
  CHECK(r.out.find("\"ribbons\": 4") != std::string::npos);
  CHECK(run({"catalog", "--ribbons", "6"}).status == 2);
  CHECK(run({"bracket", "--a", "2,1,2"}).out == "8/3\n");
  CHECK(run({"bracket", "--a", "1"}).out == "1/1\n");
}

TEST_CASE("usage errors exit 2 and name the token", "[cli]") {
  auto r = run({"charpoly", "--gauss", "O1 Z2"});
  CHECK(r.status == 2);
  CHECK(r.err.find("Z2") != std::string::npos);
  r = run({"bracket", "--a", "2,x,2"});
  CHECK(r.status == 2);
  CHECK(r.err.find("'x'") != std::string::npos);
  CHECK(run({"charpoly"}).status == 2);
  CHECK(run({"charpoly", "--gauss", "O1 U1", "--spec", "torus:1"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"verify", "--suite", "nope"}).status == 2);
  CHECK(run({"conway", "--spec", "torus:3,"}).status == 2);
}

TEST_CASE("verify suites", "[cli][verify]") {
  auto r = run({"verify", "--suite", "recurrences"});
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS criterion 1") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"verify", "--suite", "eq13"});
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS criterion 6") != std::string::npos);
}

TEST_CASE("output is deterministic", "[cli]") {
  const auto a = run({"catalog", "--ribbons", "5", "--json"});
  const auto b = run({"catalog", "--ribbons", "5", "--json"});
  CHECK(a.out == b.out);
}
