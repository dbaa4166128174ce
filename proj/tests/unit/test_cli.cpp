#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "stcalc/cli.hpp"

using namespace stcalc;
using namespace stcalc::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome st(std::vector<std::string> args) {
  args.insert(args.begin(), "st-calc");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string second_line(const std::string& s) {
  std::istringstream is(s);
  std::string line;
  std::getline(is, line);
  std::getline(is, line);
  return line;
}

}  // namespace

TEST(Seq, GoldenRectangle) {
  auto r = st({"seq", "triangular", "--s", "1", "--t", "1", "--count", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(second_line(r.out), "0,1,2,6,15,40,104,273");
  EXPECT_NE(r.out.find("A001654"), std::string::npos);
  EXPECT_NE(r.out.find("agrees for n=0..7"), std::string::npos);
}

TEST(Seq, PellTetrahedralFromOne) {
  auto r = st({"seq", "tetrahedral", "--s", "2", "--t", "1", "--count", "4", "--start", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(second_line(r.out), "1,12,174,2436");
  auto z = st({"seq", "tetrahedral", "--s", "2", "--t", "1", "--count", "4"});
  EXPECT_EQ(second_line(z.out), "0,1,12,174");
  EXPECT_NE(z.out.find("agrees for n=1..3"), std::string::npos);
}

TEST(Seq, IntegersAtTwoMinusOne) {
  auto r = st({"seq", "fib", "--s", "2", "--t", "-1", "--count", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(second_line(r.out), "0,1,2,3,4");
}

TEST(Seq, JacobsthalMismatchIsFlagged) {
  auto r = st({"seq", "fib", "--spec", "jacobsthal", "--count", "10", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_FALSE(j["checks"][0]["agrees"].get<bool>());
  EXPECT_EQ(j["checks"][0]["mismatches"][0]["n"], 3);
  EXPECT_EQ(j["checks"][0]["mismatches"][0]["computed"], "3");
  EXPECT_EQ(j["checks"][0]["mismatches"][0]["printed"], 2);
}

TEST(Seq, GaussianColumnAtTwo) {
  auto r = st({"seq", "qbinom-column", "--q", "2", "--d", "2", "--count", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n,value,printed,source\n0,0,0,"), std::string::npos);
  EXPECT_NE(r.out.find("\n4,35,155,"), std::string::npos);
}

TEST(Seq, SymbolicValues) {
  auto r = compute_seq({.family = "triangular", .count = 4});
  ASSERT_EQ(r.values.size(), 4u);
  RatFunc s = RatFunc::var(Var::s), t = RatFunc::var(Var::t);
  EXPECT_EQ(r.values[2], s * s + t);
  EXPECT_TRUE(r.checks.empty());
}

TEST(Seq, RationalValuesStayExact) {
  auto r = st({"seq", "fib", "--s", "1/2", "--t", "1/3", "--count", "4", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n3,7/12,,"), std::string::npos);
}

TEST(Seq, UsageErrors) {
  EXPECT_EQ(st({"seq", "bogus"}).code, 2);
  EXPECT_EQ(st({"seq", "polytopic", "--s", "1", "--t", "1"}).code, 2);
  EXPECT_EQ(st({"seq", "polytopic", "--d", "13"}).code, 2);
  EXPECT_EQ(st({"seq", "fib", "--count", "202"}).code, 2);
  EXPECT_EQ(st({"seq", "fib", "--s", "1/0"}).code, 2);
  EXPECT_EQ(st({"seq", "fib", "--s", "x"}).code, 2);
  EXPECT_EQ(st({"seq", "qbinom-column", "--d", "2"}).code, 2);
  EXPECT_EQ(st({"seq", "fib", "--format", "yaml"}).code, 2);
  EXPECT_EQ(st({}).code, 2);
  EXPECT_EQ(st({"frobnicate"}).code, 2);
}

TEST(Eval, RogersSzegoTwo) {
  auto r = st({"eval", "rs-poly", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "b^2 + (1+q)*b*x + x^2");
}

TEST(Eval, ThetaZero) {
  auto r = compute_eval({.expr = "theta-deriv", .arg = 0, .order = 4});
  std::vector<std::string> want = {"1", "1", "q", "q^3", "q^6"};
  EXPECT_EQ(r.coefficients, want);
}

TEST(Eval, PolytopicOgfAtTMinusOne) {
  auto r = compute_eval({.expr = "polytopic-ogf", .arg = 2, .s = "1", .t = "-1", .order = 6});
  std::vector<std::string> want = {"1", "0", "0", "1", "0", "0", "1"};
  EXPECT_EQ(r.coefficients, want);
  ASSERT_FALSE(r.extra.empty());
  EXPECT_EQ(r.extra[0].second, "-x^3 + 1");
}

TEST(Eval, PolytopicOgfDegenerateContext) {
  // s^2 + 4t = 0: phi = phi' = 1, so the denominator is (1-x)^3.
  auto r = compute_eval({.expr = "polytopic-ogf", .arg = 2, .s = "2", .t = "-1", .order = 4});
  std::vector<std::string> want = {"1", "3", "6", "10", "15"};
  EXPECT_EQ(r.coefficients, want);
  EXPECT_EQ(r.extra[0].second, "-x^3 + 3*x^2 - 3*x + 1");
}

TEST(Eval, BinomSeries) {
  auto r = compute_eval({.expr = "binom-series", .arg = 2, .order = 3});
  EXPECT_EQ(r.text, "u*x^2 + s*x*y + v*y^2");
}

TEST(Eval, JsonAndErrors) {
  auto r = st({"eval", "theta-deriv", "1", "--order", "5", "--q", "1/2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["kind"], "eval");
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(st({"eval", "theta-deriv", "0", "--order", "65"}).code, 2);
  EXPECT_EQ(st({"eval", "polytopic-ogf", "13"}).code, 2);
  EXPECT_EQ(st({"eval", "nothing", "1"}).code, 2);
  EXPECT_EQ(st({"eval", "rs-poly"}).code, 2);
}

TEST(Verify, BelowMinimumOrderIsUsageError) {
  auto r = st({"verify", "--order", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("order"), std::string::npos);
  EXPECT_EQ(st({"verify", "--order", "65"}).code, 2);
}

TEST(Verify, SchlosserFilter) {
  auto r = st({"verify", "--filter", "schlosser", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["cases"].size(), 1u);
  EXPECT_EQ(j["cases"][0]["id"], "s6.schlosser_q_squares");
  EXPECT_EQ(j["cases"][0]["status"], "pass");
}

TEST(Verify, CsvAndOutputFile) {
  std::string path = ::testing::TempDir() + "verify.csv";
  auto r = st({"verify", "--order", "4", "--filter", "s6.list_p", "--format", "csv", "-o", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header.rfind("id,section,expectation,status", 0), 0u);
  std::remove(path.c_str());
}

TEST(Show, CaseAndLists) {
  auto r = st({"show", "case", "s6.warnaar_eq21"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("s6.warnaar_eq21"), std::string::npos);
  EXPECT_EQ(st({"show", "case", "nope"}).code, 2);
  EXPECT_EQ(st({"show", "lists"}).code, 0);
  auto j = json::parse(st({"show", "cases", "--format", "json"}).out);
  EXPECT_GE(j["cases"].size(), 45u);
}

TEST(Help, ExitsZero) {
  auto r = st({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("seq"), std::string::npos);
}
