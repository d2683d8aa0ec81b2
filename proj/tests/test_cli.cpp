#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
  std::vector<nlohmann::json> lines() const {
    std::vector<nlohmann::json> parsed;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) parsed.push_back(nlohmann::json::parse(line));
    return parsed;
  }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mergesplit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string game(const char* name) { return std::string(MERGESPLIT_EXAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("iterate reaches the generator's partition") {
  const Result r = run({"iterate", "--game", game("example61_nash_3.json"), "--start", "1|2|3"});
  REQUIRE(r.code == 0);
  const auto lines = r.lines();
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0]["command"] == "iterate");
  CHECK(lines[0]["relation"] == "tu/nash/v");
  CHECK(lines[1]["start"] == "1|2|3");
  CHECK(lines.back()["terminal"] == "1,2,3");
}

TEST_CASE("iterate on the three-player fixture") {
  const Result r = run({"iterate", "--game", game("example5.json")});
  REQUIRE(r.code == 0);
  CHECK(r.lines().back()["terminal"] == "1,2,3");

  const Result idle = run({"iterate", "--game", game("example5.json"), "--start", "1,2,3"});
  REQUIRE(idle.code == 0);
  CHECK(idle.lines().back()["steps"] == 0);
}

TEST_CASE("random schedules are reproducible") {
  const std::vector<std::string> args{"iterate", "--game", game("example62_pareto_4.json"), "--basis", "phi",
                                      "--schedule", "random", "--seed", "17"};
  const Result a = run(args);
  const Result b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.lines().back()["terminal"] == "1,3|2,4");
}

TEST_CASE("outcomes") {
  const Result r = run({"outcomes", "--game", game("hedonic_4.json"), "--start", "1,3|2,4"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["outcomes"] == nlohmann::json::parse(R"(["1,2|3,4"])"));
  CHECK(r.json()["instance"]["digest"].get<std::string>().size() == 16);
}

TEST_CASE("stable scans") {
  const Result none = run({"stable", "--game", game("example5.json"), "--scan"});
  REQUIRE(none.code == 0);
  CHECK(none.json()["stable_partition"] == "none");

  const Result found = run({"stable", "--game", game("example61_nash_3.json"), "--scan"});
  REQUIRE(found.code == 0);
  CHECK(found.json()["stable_partition"] == "1,2,3");

  const Result semi = run({"stable", "--game", game("semi_union_3.json"), "--order", "utilitarian", "--scan"});
  REQUIRE(semi.code == 0);
  CHECK(semi.json()["stable_partition"] == "1,2|3");
}

TEST_CASE("direct and lemma verdicts agree") {
  for (const char* p : {"1|2|3", "1,2|3", "1,2,3"}) {
    const Result direct = run({"stable", "--game", game("example5.json"), "--mode", "dc-direct", "--partition", p});
    const Result lemma = run({"stable", "--game", game("example5.json"), "--mode", "dc-lemma", "--partition", p});
    REQUIRE(direct.code == 0);
    REQUIRE(lemma.code == 0);
    CHECK(direct.json()["verdict"]["stable"] == lemma.json()["verdict"]["stable"]);
  }
  const Result dp = run({"stable", "--game", game("theorem1.json"), "--order", "nash", "--mode", "dp", "--partition", "1|2"});
  REQUIRE(dp.code == 0);
  CHECK(dp.json()["verdict"]["stable"] == false);
  CHECK(dp.json()["verdict"]["witness"] == "1,2");
}

TEST_CASE("scan") {
  const Result r = run({"scan", "--game", game("exchange_4.json")});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["partitions"].size() == 15);
  CHECK(j["dc_stable"] == nlohmann::json::parse(R"(["1,2|3,4"])"));
}

TEST_CASE("properties") {
  const Result util = run({"properties", "--order", "utilitarian", "--grid", "0,1,2,3", "--max-size", "3"});
  REQUIRE(util.code == 0);
  const auto j = util.json();
  CHECK(j["expected_hold"] == true);
  CHECK(j["axioms"][4]["axiom"] == "semi-linear");
  CHECK(j["semi_linear"]["other"] == 0);

  const Result avg = run({"properties", "--order", "average", "--grid", "0,1,2,3", "--max-size", "2"});
  CHECK(avg.code == 0);
  CHECK(avg.json()["axioms"][2]["axiom"] == "m1");
  CHECK(avg.json()["axioms"][2]["holds"] == false);
  CHECK(avg.json()["axioms"][2]["witness"].size() == 6);

  const Result maj = run({"properties", "--order", "majority", "--grid", "0,1,2,3", "--max-size", "3"});
  CHECK(maj.code == 0);
  CHECK(maj.json()["axioms"][1]["holds"] == false);

  const Result nash = run({"properties", "--order", "nash", "--grid", "0,1,2", "--max-size", "2"});
  CHECK(nash.code == 1);
  CHECK(nash.json()["expected_hold"] == false);
  CHECK(nash.err.find("m2") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> args{"scan", "--game", game("example61_nash_3.json")};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"iterate", "--game", "/nonexistent.json"}).code == 2);
  CHECK(run({"iterate", "--game", game("example5.json"), "--start", "1|2"}).code == 2);
  CHECK(run({"iterate", "--game", game("example5.json"), "--schedule", "sometimes"}).code == 2);
  CHECK(run({"iterate", "--game", game("theorem1.json")}).code == 2);
  CHECK(run({"iterate", "--game", game("theorem1.json"), "--order", "average"}).code == 3);
  CHECK(run({"iterate", "--game", game("theorem1.json"), "--order", "majority", "--basis", "phi"}).code == 3);
  CHECK(run({"stable", "--game", game("example5.json")}).code == 2);
  CHECK(run({"properties", "--order", "nash", "--max-size", "5"}).code == 2);
  CHECK(run({"properties", "--order", "nash", "--grid", "1,x"}).code == 2);
  const Result bad = run({"iterate", "--game", game("theorem1.json"), "--order", "average"});
  CHECK(bad.out.empty());
  CHECK(bad.err.find("InadmissibleOrder") != std::string::npos);
}
