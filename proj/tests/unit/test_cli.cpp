#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "gainrank/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = gainrank::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kC4 = "# gaingraph v1\nn 4\ne 1 2 t:0\ne 2 3 t:0\ne 3 4 t:0\ne 1 4 t:0\n";

}  // namespace

TEST(Cli, CatalogPipesIntoRank) {
  const Result g9 = run({"catalog", "G9"});
  ASSERT_EQ(g9.code, 0) << g9.err;
  const Result r = run({"rank"}, g9.out);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, InertiaAndCycleType) {
  EXPECT_EQ(run({"inertia", "-"}, kC4).out, "(1, 1, 2)\n");
  const Result c = run({"cycle-type", "--cycle", "1,2,3,4"}, kC4);
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, 1), "A");
  EXPECT_EQ(run({"cycle-type", "--cycle", "1,2,3"}, kC4).code, 1);
}

TEST(Cli, CatalogGainsFollowPrintedEdgeOrder) {
  const Result plain = run({"catalog", "G17"});
  ASSERT_EQ(plain.code, 0);
  const Result gained = run({"catalog", "G17", "--gains", "t:0,t:0,t:0.5,t:0,t:0,t:0,t:0"});
  ASSERT_EQ(gained.code, 0) << gained.err;
  std::istringstream a(plain.out), b(gained.out);
  std::string la, lb;
  int differing = 0;
  int line = 0;
  while (std::getline(a, la) && std::getline(b, lb)) {
    ++line;
    if (la != lb) {
      ++differing;
      EXPECT_EQ(line, 5);
      EXPECT_EQ(lb.substr(lb.size() - 5), "t:0.5");
    }
  }
  EXPECT_EQ(differing, 1);
  EXPECT_EQ(run({"catalog", "G17", "--gains", "t:0"}).code, 1);
}

TEST(Cli, JsonOutputHasStableKeys) {
  const Result r = run({"rank", "--json"}, kC4);
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"command", "input", "tol", "result", "fragile", "failures"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["command"], "rank");
  EXPECT_EQ(j["result"]["rank"], 2);
  EXPECT_EQ(run({"rank", "--json"}, kC4).out, r.out);
}

TEST(Cli, ClassifyReportsStructure) {
  const Result g = run({"catalog", "G12"});
  const Result r = run({"classify", "--json"}, g.out);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["family"], "bicyclic");
  EXPECT_EQ(j["result"]["base"], "theta(0,1,1)");
  EXPECT_EQ(j["result"]["rank"], 5);
  EXPECT_EQ(j["result"]["predicted"]["lower"], 5);
  EXPECT_EQ(j["result"]["table"]["catalog"], "G12");
  EXPECT_FALSE(j["result"]["table"]["satisfied"]);
}

TEST(Cli, VerifyExitCodes) {
  const Result ok = run({"verify", "lemma2.3", "--trials", "1000", "--seed", "42"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(run({"verify", "lemma9.9"}).code, 2);
  const Result j = run({"verify", "lemma2.2", "--trials", "50", "--seed", "1", "--json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(j.out)["failures"].is_array());
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"rank", "--tol", "-1"}, kC4).code, 2);
  const Result bad = run({"rank"}, "# gaingraph v1\nn 2\ne 1 2 c:0.5,0.5\n");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("3"), std::string::npos);
  EXPECT_EQ(run({"rank", "/nonexistent/file.gg"}).code, 1);
}
