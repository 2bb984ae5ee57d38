#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "monoclean/cli.hpp"
#include "monoclean/json_io.hpp"

using namespace monoclean;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DocumentedExamples) {
  auto r = run({"pretty", "x1^2, x1*x2", "--vars", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run({"pretty", "x1*x2, x2*x3, x3*x4, x4*x1", "--vars", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "false\n");
  r = run({"dseq", "x1*x2, x2*x3, x3*x4", "--on", "--seq", "x4*x1", "--vars", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
}

TEST(Cli, StrictTurnsFalseIntoExitOne) {
  EXPECT_EQ(run({"clean", "x1^2, x1*x2", "--strict"}).code, 1);
  EXPECT_EQ(run({"pretty", "x1^2, x1*x2", "--strict"}).code, 0);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "thm99"}).code, 2);
  const auto r = run({"clean", "x1^2, 3*x2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 6"), std::string::npos);
  EXPECT_NE(r.err.find("'3'"), std::string::npos);
  EXPECT_EQ(run({"clean", "x1, x3", "--vars", "2"}).code, 2);
  EXPECT_EQ(run({"decompose", "0", "--vars", "2"}).code, 2);
}

TEST(Cli, ResourceCapExitsThree) {
  std::string many;
  for (int i = 1; i <= 16; ++i) many += (i > 1 ? ", x" : "x") + std::to_string(i);
  EXPECT_EQ(run({"foresttype", many}).code, 3);
}

TEST(Cli, TextOutputs) {
  EXPECT_EQ(run({"saturate", "x1^2, x1*x2"}).out, "x1\n");
  EXPECT_EQ(run({"ass", "x1^2, x1*x2"}).out, "(x1)\n(x1, x2)\n");
  EXPECT_EQ(run({"ass", "x1^2, x1*x2", "--maximal"}).out, "true\n");
  EXPECT_EQ(run({"ass", "x1*x2, x2*x3, x3*x4", "--min-dim"}).out, "2\n");
  EXPECT_EQ(run({"minprimes", "x1^2, x1*x2"}).out, "(x1)\n");
  EXPECT_EQ(run({"decompose", "x1^2, x1*x2"}).out, "x1\nx1^2, x2\n");
  EXPECT_EQ(run({"pretty", "x1^2, x1*x2", "--certify"}).out, "true\n(x1)  T = {1}\n(x1^2, x2)  T = {x1}\n");
  EXPECT_EQ(run({"pretty", "x1^2, x1*x2", "--oracle", "--certify"}).out, "true\nx1 -> (x1, x2)\n1 -> (x1)\n");
  EXPECT_EQ(run({"filtration", "x1*x2, x2*x3, x3*x4, x4*x1"}).out, "none\n");
  EXPECT_EQ(run({"filterreg", "x1^2, x1*x2", "--check", "x2"}).out, "true\n");
  EXPECT_EQ(run({"filterreg", "x1^2, x1*x2", "--find", "1", "--cap", "2"}).out, "x2\n");
  EXPECT_EQ(run({"regseq", "x1*x2", "--check", "x3", "--vars", "3"}).out, "true\n");
  EXPECT_EQ(run({"regseq", "x1*x2", "--check", "x3", "--vars", "3", "--formula"}).out, "true\n");
  EXPECT_EQ(run({"dseq", "x1, x1*x2", "--check"}).out, "false\n");
  EXPECT_EQ(run({"gcdcond", "x1*x2, x2*x3, x3*x4"}).out, "false\n");
  EXPECT_EQ(run({"gcdcond", "x1*x2, x2*x3, x3*x4", "--any-order"}).out, "true\n");
  EXPECT_EQ(run({"foresttype", "x1*x2, x2*x3, x3*x4, x4*x1"}).out, "false\n");
  EXPECT_EQ(run({"depth", "x1*x2, x2*x3, x3*x4"}).out, "2\n");
  EXPECT_EQ(run({"sdepth", "x1*x2, x2*x3, x3*x4"}).out, "2\n");
  EXPECT_EQ(run({"stanley", "x1^2, x1*x2"}).out, "true\n");
  EXPECT_EQ(run({"hreg", "x1^2, x1*x2"}).out, "true\n");
  EXPECT_EQ(run({"betti", "x1^2, x1*x2"}).out, "i\\d 0 1 2 3\n  0 1 . . .\n  1 . . 2 .\n  2 . . . 1\n");
}

TEST(Cli, GenIsDeterministic) {
  const auto a = run({"gen", "--seed", "5", "--trials", "4", "--vars", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run({"gen", "--seed", "5", "--trials", "4", "--vars", "3"}).out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 4);
  EXPECT_EQ(run({"gen", "--vars", "2", "--squarefree", "--gens", "5"}).code, 2);
}

TEST(Cli, JsonOutputIsVersioned) {
  auto r = run({"pretty", "x1^2, x1*x2", "--json", "--certify"});
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["holds"], true);
  EXPECT_EQ(j["certificate"]["components"].size(), 2u);
  r = run({"verify", "oracle-agreement", "--trials", "3", "--json"});
  const auto report = decode<VerificationReport>(Json::parse(r.out));
  EXPECT_EQ(report.trials, 3u);
  EXPECT_TRUE(report.pass());
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "monoclean_cli_out.json";
  const auto r = run({"verify", "thm33", "--trials", "4", "--json", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto report = decode<VerificationReport>(Json::parse(in));
  EXPECT_EQ(report.theorem, "thm33");
  std::remove(path.c_str());
}
