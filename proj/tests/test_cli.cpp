#include <gtest/gtest.h>

#include <sstream>

#include "rankvar/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = rankvar::cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RankOfRichardson) {
  auto r = run({"rank", "--shape", "2,4;7", "--u", "4 6 | 2 7", "--v", "2 7 | 3 5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n=7 k=4 : 1-2 3-4 5-7 6-6\n");
}

TEST(Cli, Rich) {
  auto r = run({"rich", "n=7 k=4 : 1-2 3-4 6-6 5-7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "shape=1,4;7 u=6 | 2 4 7 v=2 | 3 5 7\n");
}

TEST(Cli, GPoly) {
  auto a = run({"gpoly", "--k", "2", "--n", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "6 + 8*q + 7*q^2 + 3*q^3 + q^4\n");
  EXPECT_EQ(run({"gpoly", "--k", "2", "--n", "4", "--recurrence"}).out, a.out);
}

TEST(Cli, ValidateReportsViolation) {
  auto r = run({"validate", "n=5 : 1-3 1-4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("duplicate_left_endpoint"), std::string::npos) << r.err;
  auto ok = run({"validate", "(2 3 4,1 2 3)", "--n", "4"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.out, "valid: n=4 k=2 : 1-3 2-4\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gpoly", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"gpoly", "--k", "x", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"rank", "--shape", "2,4;7"}).code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run({"dim", "(2 3,1)"}).code, 1);
  EXPECT_EQ(run({"rank", "--shape", "2;4", "--u", "1 2", "--v", "1 2"}).code, 1);
  EXPECT_EQ(run({"dim", "{\"n\": 3"}).code, 1);
}

TEST(Cli, EnumerateByDimTupleNotation) {
  auto r = run({"enumerate", "--k", "2", "--n", "4", "--by-dim", "--paper-notation"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<int> per_dim;
  while (std::getline(lines, line)) per_dim.push_back(static_cast<int>(std::count(line.begin(), line.end(), '(')));
  EXPECT_EQ(per_dim, (std::vector<int>{6, 8, 7, 3, 1}));
  EXPECT_NE(r.out.find("4: (2 3 4,1 2 3)"), std::string::npos);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"enumerate", "--k", "3", "--n", "6", "--jobs", "3"};
  auto a = run(args), b = run(args), c = run({"enumerate", "--k", "3", "--n", "6"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, SingularAndSmooth) {
  auto s = run({"singular", "n=10 : 1-6 3-4 5-10 7-8", "--paper-notation"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("4 components"), std::string::npos) << s.out;
  auto j = run({"--json", "singular", "n=10 : 1-6 3-4 5-10 7-8"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(rankvar::json::parse(j.out)["components"].size(), 4u);
  auto m = run({"smooth", "n=12 : 1-5 2-6 3-7 4 8-10 9-11 12"});
  EXPECT_EQ(m.out, "smooth: G(3,6) x G(2,4) with singletons {[4,4], [12,12]}\n");
  auto r = run({"smooth", "--shape", "3;8", "--u", "4 6 8", "--v", "4 6 8"});
  EXPECT_EQ(r.out, "singular\n");
}

TEST(Cli, TFixedAndRoundtrip) {
  auto t = run({"tfixed", "--smooth", "n=5 : 1-3 3-5"});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.out, "1 4\n1 5\n2 4\n2 5\n4 points\n");
  auto rt = run({"roundtrip", "-"}, "n=8 : 1-7 2-6 3-4 4-5 6-8");
  EXPECT_EQ(rt.code, 0) << rt.err;
  EXPECT_EQ(rt.out, "n=8 k=5 : 1-7 2-6 3-4 4-5 6-8\n");
}

TEST(Cli, StirlingAndOracle) {
  auto s = run({"stirling-check", "--max-n", "6"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("PASS"), std::string::npos);
  auto o = run({"oracle", "n=4 : 1-3 2-4"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("fitted degree 4, dim 4"), std::string::npos) << o.out;
  auto su = run({"oracle", "--suite", "--kmax", "2", "--nmax", "4"});
  EXPECT_EQ(su.code, 0) << su.out;
  EXPECT_NE(su.out.find("PASS"), std::string::npos);
}
