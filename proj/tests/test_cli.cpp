#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "stanley/cli.hpp"
#include "stanley/json_io.hpp"

using namespace stanley;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  const auto r = run({"count", "2,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");
  CHECK(run({"count", "[2,1]"}).out == "2\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"count", ""}).code == cli::exit_usage);
  CHECK(run({"count", "2,x"}).code == cli::exit_usage);
  CHECK(run({"frobnicate"}).code == cli::exit_usage);
  CHECK(run({"count", "2,1", "--bogus"}).code == cli::exit_usage);
  CHECK(run({}).code == cli::exit_usage);
  CHECK(run({"yfm", "1,2"}).code == cli::exit_usage);
  CHECK(run({"fact3", "1", "1", "1"}).code == cli::exit_usage);
  CHECK(run({"fact3", "--a", "1", "--b", "2", "--c", "1"}).code == cli::exit_usage);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("json counts are strings and round-trip") {
  const auto r = run({"--json", "count", "12,10,8,6,4,2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["count"].is_string());
  const auto value = count_from_json(j["count"]);
  CHECK(value.str() == j["count"].get<std::string>());
  CHECK(value > BigInt(std::numeric_limits<std::uint64_t>::max()));

  const auto trailing = run({"count", "2,2,1", "--json"});
  CHECK(nlohmann::json::parse(trailing.out)["count"] == "5");
}

TEST_CASE("moves and enumerate") {
  const auto m = nlohmann::json::parse(run({"--json", "moves", "4,5,0,0,2,0,3,1"}).out);
  REQUIRE(m["moves"].size() == 4);
  CHECK(m["moves"][0]["index"] == 2);
  CHECK(m["moves"][3]["child"] == nlohmann::json::array({4, 5, 0, 0, 2, 0, 3}));

  const auto e = run({"enumerate", "2,1"});
  CHECK(e.code == 0);
  CHECK(e.out == "[2,1], [1,1], [1], []\n[2,1], [2], [1], []\n");

  const auto over = run({"enumerate", "2,2,1", "--limit", "3"});
  CHECK(over.code == cli::exit_failure);
  CHECK(over.err.find("5") != std::string::npos);
}

TEST_CASE("sample is reproducible") {
  const auto a = run({"sample", "4,5,0,0,2,0,3,1", "--seed", "9"});
  const auto b = run({"sample", "4,5,0,0,2,0,3,1", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"sample", "3"}).out == "[3], [2], [1], []\n");
}

TEST_CASE("formula subcommands") {
  CHECK(run({"yfm", "2,2,1"}).out == "5\n");
  CHECK(run({"syt", "2,2,1"}).out == "5\n");
  CHECK(run({"syt", "7,6"}).code == cli::exit_failure);
  CHECK(run({"fact3", "--a", "3", "--b", "2", "--c", "1"}).out == "26\n");
  CHECK(run({"avoiders", "4"}).out == "14 (catalan 14)\n");
  const auto arr = nlohmann::json::parse(run({"--json", "arrange", "3,2,1", "2,3,1"}).out);
  CHECK(arr["position"] == nlohmann::json::array({2, 1, 3}));
  CHECK(arr["count"] == "26");
  CHECK(arr["yfm"] == "16");
  CHECK(arr["avoids_231"] == false);
}

TEST_CASE("reduced words and witness") {
  CHECK(run({"reduced", "4,2,1,3"}).out == "3\n");
  CHECK(run({"reduced", "4,3,2,1", "--bruteforce"}).out == "16\n");
  const auto w = run({"witness", "3,1"});
  CHECK(w.code == 0);
  CHECK(w.out == "[4,2,1,3]  reduced words 3  yfm 3\n");
  CHECK(run({"witness", "2,2"}).code == cli::exit_usage);
}

TEST_CASE("verify reports") {
  const auto r = run({"verify", "yfm", "--max-sum", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mismatches=0") != std::string::npos);

  const auto j1 = run({"--json", "verify", "fact3", "--max-sum", "9"});
  const auto j2 = run({"--json", "verify", "fact3", "--max-sum", "9"});
  CHECK(j1.code == 0);
  CHECK(j1.out == j2.out);
  const auto report = nlohmann::json::parse(j1.out);
  CHECK(report["mismatches"] == 0);
  CHECK(report["ok"] == true);

  // A failing sweep exits 1 and lists its witnesses.
  const auto rec = run({"verify", "recurrences", "--max", "3"});
  CHECK(rec.code == cli::exit_failure);
  CHECK(rec.out.find("mismatch S([a1,a2]) a1=1,a2=1") != std::string::npos);
  CHECK(run({"verify", "rearrange", "--strict", "--max-length", "3"}).code == 0);
  CHECK(run({"verify"}).code == cli::exit_usage);
  CHECK(run({"verify", "nothing"}).code == cli::exit_usage);
}

TEST_CASE("guess") {
  const auto r = run({"guess", "--template", "ge", "--gap", "0", "--degree", "2", "--range", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "S([x,y]) = (x+y)!/((x+1)!*y!) * (x - y + 1)\n");

  const auto none = run({"guess", "--degree", "0"});
  CHECK(none.code == cli::exit_failure);
  CHECK(none.out.find("no fit") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"--json", "guess", "--degree", "1"}).out);
  CHECK(j["fit"]["p"] == 1);
  CHECK(j["fit"]["terms"].size() == 3);
}
