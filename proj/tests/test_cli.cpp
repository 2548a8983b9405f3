#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "parafact/cli.hpp"
#include "parafact/verify.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = parafact::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("markov tree --json") {
  const auto r = run({"markov", "tree", "--depth", "3", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["command"] == "markov tree");
  std::vector<std::vector<int>> triples;
  for (const auto& n : j["results"]["nodes"]) triples.push_back(n["triple"]);
  CHECK(std::find(triples.begin(), triples.end(), std::vector<int>{1, 5, 13}) != triples.end());
  CHECK(std::find(triples.begin(), triples.end(), std::vector<int>{2, 5, 29}) != triples.end());
  CHECK(triples.size() == 5);
}

TEST_CASE("global flags may follow the subcommand") {
  const auto before = run({"--json", "markov", "brute", "--max", "34"});
  const auto after = run({"markov", "brute", "--max", "34", "--json"});
  CHECK(before.code == 0);
  CHECK(before.out == after.out);
  CHECK(json::parse(before.out)["results"]["count"] == 6);
}

TEST_CASE("large integers become strings") {
  const auto r = run({"markov", "tree", "--depth", "14", "--json"});
  REQUIRE(r.code == 0);
  const auto nodes = json::parse(r.out)["results"]["nodes"];
  CHECK(nodes.front()["triple"][0].is_number_integer());
  CHECK(nodes.back()["triple"][2].is_string());
}

TEST_CASE("verify-paper") {
  const auto r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  for (const auto& id : parafact::check_ids()) CHECK(r.out.find("PASS " + id) != std::string::npos);
}

TEST_CASE("verify-paper with a corrupted constant") {
  const auto r = run({"--json", "verify-paper", "--corrupt-constant", "shear", "--bound-3pt", "10"});
  CHECK(r.code == 1);
  const auto j = json::parse(r.out);
  std::vector<std::string> failed;
  for (const auto& c : j["results"]["checks"]) {
    if (!c["passed"].get<bool>()) failed.push_back(c["id"]);
  }
  CHECK(failed == parafact::checks_using_constant("shear"));
  CHECK(run({"verify-paper", "--corrupt-constant", "nonsense"}).code == 2);
}

TEST_CASE("verify-paper --report") {
  const std::string path = "cli_test_report.json";
  std::remove(path.c_str());
  const auto r = run({"--json", "verify-paper", "--bound-3pt", "10", "--report", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(json::parse(buffer.str()) == json::parse(r.out));
  std::remove(path.c_str());
}

TEST_CASE("usage errors name the offending token") {
  auto r = run({"factorize", "--target", "1,1,1,1", "--length", "2", "--bound", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("1,1,1,1") != std::string::npos);

  r = run({"factorize", "--target", "1,2,3", "--length", "2", "--bound", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("1,2,3") != std::string::npos);

  r = run({"factorize", "--target", "1,x,0,1", "--length", "2", "--bound", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("x") != std::string::npos);

  r = run({"factorize", "--target", "1,0,9,1", "--length", "4", "--bound", "3"});
  CHECK(r.code == 2);

  r = run({"hurwitz", "--tuple", "1:2:4;1:1:1", "--moves", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("1:2:4") != std::string::npos);

  r = run({"hurwitz", "--tuple", "1:5:1;1:2:1", "--moves", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("'1'") != std::string::npos);

  r = run({"hurwitz", "--tuple", "2:5:1", "--moves", "0"});
  CHECK(r.code == 2);

  r = run({"hyperbola", "--eps", "0", "--bound", "3"});
  CHECK(r.code == 2);

  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"markov"}).code == 2);
  CHECK(run({"orbit", "--tuple", "1:0:1", "--conjugator", "2,0,0,1", "--max-nodes", "3"}).code == 2);
}

TEST_CASE("hurwitz") {
  auto r = run({"--json", "hurwitz", "--tuple", "1:5:1;1:2:1", "--moves", "0"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["results"]["result"]["factors"] == json::parse("[[3,1,-4,-1],[3,4,-1,-1]]"));
  CHECK(j["results"]["result"]["target"] == json::parse("[-7,-1,1,0]"));

  r = run({"--json", "hurwitz", "--tuple", "1:2:1;1:1:2", "--moves", "-0"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["results"]["result"]["factors"] == json::parse("[[6,1,-25,-4],[3,1,-4,-1]]"));

  r = run({"hurwitz", "--tuple", "1:5:1;1:2:1", "--moves", "0,-0"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("result +1:5:1;+1:2:1") != std::string::npos);
}

TEST_CASE("factorize") {
  const auto r = run({"--json", "factorize", "--target", "-7,-1,1,0", "--length", "2", "--bound",
                      "5", "--eps", "all"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["results"]["count"] == 3);
  const auto one = run({"--workers", "1", "factorize", "--target", "1,0,9,1", "--length", "3",
                        "--bound", "10", "--eps", "all"});
  const auto four = run({"--workers", "4", "factorize", "--target", "1,0,9,1", "--length", "3",
                         "--bound", "10", "--eps", "all"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  const auto minus = run({"factorize", "--target", "1,0,9,1", "--length", "3", "--bound", "6",
                          "--eps", "-1"});
  CHECK(minus.code == 0);
  CHECK(minus.out.rfind("0 factorizations", 0) == 0);
}

TEST_CASE("hyperbola") {
  const auto r = run({"--json", "hyperbola", "--eps", "+1", "--bound", "3", "--generate", "0"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["results"]["count"] == 6);
  CHECK(j["results"]["solutions"] == j["results"]["generated"]);
  const auto m = run({"hyperbola", "--eps=-1", "--bound", "1"});
  CHECK(m.code == 0);
  CHECK(m.out.find("4 solutions") != std::string::npos);
}

TEST_CASE("orbit") {
  auto r = run({"--json", "orbit", "--tuple", "1:5:1;1:2:1", "--max-nodes", "100"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  // Moves alone generate an infinite orbit of pairs.
  CHECK(j["results"]["truncated"] == true);
  bool has_pair1 = false;
  for (const auto& rep : j["results"]["representatives"]) {
    has_pair1 = has_pair1 || rep == json::parse(R"([{"eps":1,"c":2,"d":1},{"eps":1,"c":1,"d":2}])");
  }
  CHECK(has_pair1);

  r = run({"orbit", "--tuple", "1:5:1;1:2:1", "--max-nodes", "2"});
  CHECK(r.code == 0);
  r = run({"--strict", "orbit", "--tuple", "1:5:1;1:2:1", "--max-nodes", "2"});
  CHECK(r.code == 3);
  r = run({"--json", "orbit", "--tuple", "1:3:1;1:0:1;1:-3:1", "--conjugator", "1,0,1,1",
           "--max-nodes", "1000"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["results"]["shift_step"] == 1);
}

TEST_CASE("--quiet suppresses text") {
  const auto r = run({"--quiet", "markov", "brute", "--max", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("--help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-paper") != std::string::npos);
  CHECK(r.out.find("corrupt") == std::string::npos);
}
