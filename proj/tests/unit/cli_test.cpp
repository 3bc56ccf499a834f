#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "entropic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = entropic::tools::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(ENTROPIC_FIXTURE_DIR) + "/" + name + ".json"; }

}  // namespace

TEST(Cli, Degree) {
  auto r = run({"degree", "--matrix", fixture("three_by_five")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\n  \"degree\": 8,\n  \"crosscheck\": 8\n}\n");
}

TEST(Cli, BasicMatrixIsDomainError) {
  auto r = run({"disc", "--matrix", fixture("basic")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("basic matrix"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"degree"}).code, 1);
  EXPECT_EQ(run({"degree", "--matrix", fixture("three_by_five"), "--bogus"}).code, 1);
  EXPECT_EQ(run({"degree", "--matrix", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run({"solve", "--matrix", fixture("three_by_five"), "--b", "1,x"}).code, 1);
  EXPECT_EQ(run({"disc", "--matrix", fixture("three_by_five"), "--regime", "d3"}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  for (const char* verb : {"degree", "solve", "probe", "disc", "selftest", "retina-table"}) {
    auto r = run({verb, "--help"});
    EXPECT_EQ(r.code, 0) << verb;
    EXPECT_NE(r.out.find("--"), std::string::npos) << verb;
  }
}

TEST(Cli, WrongRegimeIsDomainError) {
  EXPECT_EQ(run({"disc", "--matrix", fixture("three_by_five"), "--regime", "d2"}).code, 2);
  EXPECT_EQ(run({"disc", "--matrix", fixture("three_by_five")}).code, 2);
}

TEST(Cli, DegenerateRhsIsDomainError) {
  auto r = run({"solve", "--matrix", fixture("minus_k4"), "--b", "3,3,3,3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DegenerateRHS"), std::string::npos);
}

TEST(Cli, SolveIsDeterministic) {
  auto a = run({"solve", "--matrix", fixture("minus_k4"), "--b", "2,3,5,7"});
  auto b = run({"solve", "--matrix", fixture("minus_k4"), "--b", "2,3,5,7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"count\": 7"), std::string::npos);
}

TEST(Cli, RetinaSolveFromGraph) {
  auto r = run({"retina", "solve", "--graph", fixture("minus_k4_graph"), "--b", "2,3,5,7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"count\": 7"), std::string::npos);
}

TEST(Cli, ProbeCsv) {
  auto r = run({"probe", "--matrix", fixture("three_by_five"), "--from", "3,2,2", "--to", "0,1,0", "--steps", "4"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "step,b1,b2,b3,gap");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 5);
}

TEST(Cli, GraphMatrixAndTable) {
  auto g = run({"graph", "matrix", "--graph", fixture("k4_graph")});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("\"rows\": 3"), std::string::npos);
  auto t = run({"retina-table", "--dmax", "10"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("123087958"), std::string::npos);
  EXPECT_NE(t.out.find("8161237"), std::string::npos);
}

TEST(Cli, DiscElementaryAndSymdisc) {
  auto d = run({"disc", "--matrix", fixture("special_d4"), "--elementary"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("\"elementary\""), std::string::npos);
  EXPECT_EQ(run({"symdisc", "--matrix", fixture("basic")}).code, 2);
  const std::string path = testing::TempDir() + "sym.json";
  std::ofstream(path) << R"({"rows":2,"cols":2,"entries":[["1","2"],["2","-3"]]})";
  auto s = run({"symdisc", "--matrix", path});
  EXPECT_EQ(s.code, 0);
  // (a - c)^2 + 4 b^2 = 16 + 16
  EXPECT_NE(s.out.find("\"symdisc\": \"32\""), std::string::npos);
}

TEST(Cli, MatroidRecipAndLocus) {
  EXPECT_EQ(run({"matroid", "info", "--matrix", fixture("oriented_k4")}).code, 0);
  auto c = run({"recip", "circuits", "--matrix", fixture("minus_k4")});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("x1*x2*x5"), std::string::npos);
  EXPECT_EQ(run({"recip", "ga", "--matrix", fixture("three_by_five")}).code, 0);
  auto s = run({"recip", "singular", "--matrix", fixture("three_by_five")});
  EXPECT_EQ(s.code, 0);
  auto l = run({"real-locus", "--matrix", fixture("three_by_five")});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("\"components\""), std::string::npos);
}
