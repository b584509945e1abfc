#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "twotrans/cli.hpp"

using namespace twotrans;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::vector<std::string>(args), out, err);
  return Run{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify output") {
  auto r = cli({"--format", "json", "classify", "--max-rank", "4"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("command") == "classify");
  std::vector<std::pair<std::string, int>> rows;
  for (const auto& row : doc.at("rows")) {
    CHECK(row.at("two_transitive") == true);
    rows.emplace_back(row.at("diagram").get<std::string>(), row.at("node").get<int>());
  }
  std::vector<std::pair<std::string, int>> expected{
      {"A2", 1}, {"A2", 2}, {"A3", 1}, {"A3", 3}, {"A4", 1}, {"A4", 4}};
  std::sort(rows.begin(), rows.end());
  CHECK(rows == expected);
  REQUIRE(doc.at("degenerate").size() == 1);
  CHECK(doc.at("degenerate")[0].at("diagram") == "A1");
}

TEST_CASE("double cosets output") {
  auto r = cli({"--format", "json", "double-cosets", "--type", "B3", "--node", "1"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("orbit_size") == 6);
  REQUIRE(doc.at("classes").size() == 3);
  CHECK(doc.at("classes")[0].at("size") == 1);
  CHECK(doc.at("classes")[1].at("size") == 4);
  CHECK(doc.at("classes")[2].at("size") == 1);
  CHECK(doc.at("classes")[1].at("representative") == json::array({1}));

  // diagrams are accepted as inline documents too
  auto r2 = cli({"--format", "json", "double-cosets", "--type",
                 R"({"nodes": 2, "bonds": [[1,2,5]]})", "--node", "1"});
  REQUIRE(r2.code == 0);
  CHECK(json::parse(r2.out).at("class_count") == 3);

  auto bad = cli({"double-cosets", "--type", "I2(inf)", "--node", "1"});
  CHECK(bad.code == 2);
  auto bad_node = cli({"double-cosets", "--type", "A3", "--node", "9"});
  CHECK(bad_node.code == 2);
}

TEST_CASE("building checks") {
  auto r = cli({"--format", "json", "building", "--rank", "2", "--q", "2",
                "--check", "all"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.at("chamber_count") == 21);
  CHECK(doc.at("pass") == true);
  for (const auto& check : doc.at("checks")) CHECK(check.at("pass") == true);

  auto serial = cli({"--format", "json", "building", "--rank", "2", "--q", "3",
                     "--check", "points", "--serial"});
  CHECK(serial.code == 0);
}

TEST_CASE("decompose") {
  auto r = cli({"--format", "json", "decompose", "--type", "B4", "--op", "sym2",
                "--weight", "0,0,0,1"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  auto comps = doc.at("result").at("components");
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].at("weight") == "0,0,0,2");
  CHECK(comps[0].at("dimension") == 126);
  CHECK(comps[1].at("weight") == "1,0,0,0");
  CHECK(comps[1].at("dimension") == 9);
  CHECK(comps[2].at("weight") == "0,0,0,0");
  CHECK(doc.at("result").at("total_dimension") == 136);

  auto dim = cli({"--format", "json", "decompose", "--type", "C2", "--op", "dim",
                  "--weight", "0,1"});
  CHECK(json::parse(dim.out).at("dimension") == 5);

  auto dual = cli({"--format", "json", "decompose", "--type", "A2", "--op",
                   "dual", "--weight", "1,0"});
  CHECK(json::parse(dual.out).at("dual") == "0,1");

  auto rt = cli({"--format", "json", "decompose", "--type", "C3", "--op",
                 "realtype", "--weight", "1,0,0"});
  CHECK(json::parse(rt.out).at("real_type") == "quaternionic");

  auto tensor = cli({"--format", "json", "decompose", "--type", "C3", "--op",
                     "tensor", "--weight", "1,0,0", "--weight2", "1,0,0"});
  CHECK(json::parse(tensor.out).at("result").at("total_dimension") == 36);

  // precondition violations exit with 2
  CHECK(cli({"decompose", "--type", "B4", "--op", "dim", "--weight",
             "-1,0,0,0"}).code == 2);
  CHECK(cli({"decompose", "--type", "C3", "--op", "tensor", "--weight",
             "1,0,0"}).code == 2);
  CHECK(cli({"decompose", "--type", "B4", "--op", "dim", "--weight", "1,0"})
            .code == 2);
}

TEST_CASE("usage errors") {
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"classify"}).code == 2);  // --max-rank required
  CHECK(cli({"classify", "--max-rank", "4", "--bogus"}).code == 2);
  CHECK(cli({"decompose", "--type", "B4", "--op", "frobnicate", "--weight",
             "0,0,0,1"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("catalog subcommands") {
  auto verify = cli({"--format", "json", "catalog", "verify"});
  REQUIRE(verify.code == 0);
  CHECK(json::parse(verify.out).at("failures") == 0);

  auto lookup = cli({"--format", "json", "catalog", "lookup", "--flag",
                     "sphere_transitive", "--m", "16"});
  REQUIRE(lookup.code == 0);
  json hits = json::parse(lookup.out).at("matches");
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].at("group") == "Spin(9)");

  auto probe = cli({"--format", "json", "--seed", "31337", "catalog", "probe",
                    "--samples", "200"});
  REQUIRE(probe.code == 0);
  json pd = json::parse(probe.out);
  CHECK(pd.at("pass") == true);
  CHECK(pd.at("entries").size() == 7);  // 3 fixed kinds + 4 spiral parameters
}

TEST_CASE("structured output is deterministic and re-parses") {
  std::vector<std::vector<std::string>> invocations = {
      {"--format", "json", "classify", "--max-rank", "3"},
      {"--format", "json", "double-cosets", "--type", "B3", "--node", "1"},
      {"--format", "json", "building", "--rank", "2", "--q", "2", "--check", "all"},
      {"--format", "json", "decompose", "--type", "G2", "--op", "sym2",
       "--weight", "1,0"},
      {"--format", "json", "--seed", "5", "catalog", "probe", "--samples", "100"},
      {"--format", "jsonl", "classify", "--max-rank", "3"},
  };
  for (const auto& args : invocations) {
    std::ostringstream out1, out2, err;
    int c1 = run_cli(args, out1, err);
    int c2 = run_cli(args, out2, err);
    CHECK(c1 == c2);
    CHECK(out1.str() == out2.str());
    if (args[1] == "json") {
      json parsed;
      CHECK_NOTHROW(parsed = json::parse(out1.str()));
      CHECK_FALSE(parsed.is_discarded());
    }
  }
}
