#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bintail::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bintail_cli_test_" + name);
}

}  // namespace

TEST(Cli, EvalDoerrG) {
  const Result r = run({"eval", "--bound", "doerr-g", "--n", "20", "--k", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("lo: 2.5017265327"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("valid: true"), std::string::npos);
}

TEST(Cli, EvalExactValues) {
  Result r = run({"eval", "--bound", "plusone-c", "--n", "10", "--k", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("37/1000 = 0.037"), std::string::npos) << r.out;
  r = run({"eval", "--bound", "pelekis-k", "--n", "10", "--p", "1/2", "--t", "6", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"exact\": \"3/64\""), std::string::npos) << r.out;
  r = run({"eval", "--bound", "quarter", "--n", "100", "--p", "0.00287", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("quarter,gt_mean,,false"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "--bound", "nope", "--n", "3", "--k", "1"}).code, 64);
  EXPECT_EQ(run({"eval", "--bound", "doerr-g", "--n", "5", "--k", "0"}).code, 2);
  EXPECT_EQ(run({"eval", "--bound", "doerr-g", "--n", "5", "--k", "1", "--p", "1/5"}).code, 64);
  EXPECT_EQ(run({"eval", "--bound", "gm14", "--n", "5", "--p", "abc"}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 64);
  EXPECT_EQ(run({"verify", "--suite", "eq2", "--n-max", "3"}).code, 2);
  EXPECT_EQ(run({"figure", "fig9"}).code, 64);
  EXPECT_EQ(run({"figure", "fig1", "--samples", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, UnwritableOutputIsIoError) {
  const Result r = run({"verify", "--suite", "theorem3", "--n-max", "4", "--out", "/nonexistent-dir/x/report.json"});
  EXPECT_EQ(r.code, 74);
  EXPECT_NE(r.err.find("i/o error"), std::string::npos);
}

TEST(Cli, VerifyWritesReportAndSummary) {
  const auto path = temp_path("theorem3.json");
  const Result r = run({"verify", "--suite", "theorem3", "--n-max", "12", "--out", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("PASS theorem3:", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("holds_with_equality=1"), std::string::npos);
  const std::string body = read_file(path);
  EXPECT_EQ(body.rfind("{\n \"suite\": \"theorem3\"", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyAllTinyPasses) {
  const Result r = run({"verify", "--suite", "all", "--n-max", "3", "--out", temp_path("all3.json").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  std::filesystem::remove(temp_path("all3.json"));
}

TEST(Cli, VerifyCsvListsCells) {
  const Result r = run({"verify", "--suite", "eq2", "--n-max", "6", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("check,n,k,t,p,q,x,alpha,verdict\n", 0), 0u);
  EXPECT_NE(r.err.find("PASS eq2"), std::string::npos);
}

TEST(Cli, PrecisionPrecedence) {
  ::setenv("BINOM_BOUNDS_PRECISION", "256", 1);
  Result r = run({"eval", "--bound", "doerr-g", "--n", "20", "--k", "3"});
  EXPECT_NE(r.out.find("precision: 256"), std::string::npos) << r.out;
  r = run({"eval", "--bound", "doerr-g", "--n", "20", "--k", "3", "--precision", "64"});
  EXPECT_NE(r.out.find("precision: 64"), std::string::npos) << r.out;
  ::setenv("BINOM_BOUNDS_PRECISION", "lots", 1);
  EXPECT_EQ(run({"eval", "--bound", "doerr-g", "--n", "20", "--k", "3"}).code, 64);
  ::unsetenv("BINOM_BOUNDS_PRECISION");
  r = run({"eval", "--bound", "doerr-g", "--n", "20", "--k", "3"});
  EXPECT_NE(r.out.find("precision: 128"), std::string::npos) << r.out;
  EXPECT_EQ(run({"eval", "--bound", "doerr-g", "--n", "20", "--k", "3", "--precision", "4096"}).code, 64);
}

TEST(Cli, FigureCsv) {
  const Result r = run({"figure", "fig1", "--n", "10", "--samples", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("p,exact_gt_mean,gm14,pr16,pr16_width,doerr_g,doerr_g_width,rt11\n", 0), 0u);
  EXPECT_NE(r.out.find("\n0.5,0.376953125,0.25,"), std::string::npos);
  const Result again = run({"figure", "fig1", "--n", "10", "--samples", "10", "--jobs", "3"});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, LatticeIndexStandsInForP) {
  for (const char* bound : {"quarter", "rt11", "pr16", "pelekis-k"}) {
    std::vector<std::string> by_k{"eval", "--bound", bound, "--n", "10", "--k", "4"};
    std::vector<std::string> by_p{"eval", "--bound", bound, "--n", "10", "--p", "2/5"};
    if (std::string(bound) == "pelekis-k") {
      for (auto* v : {&by_k, &by_p}) v->insert(v->end(), {"--t", "6"});
    }
    const Result a = run(by_k);
    const Result b = run(by_p);
    EXPECT_EQ(a.code, 0) << bound << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << bound;
  }
  EXPECT_EQ(run({"eval", "--bound", "quarter", "--n", "10", "--k", "4", "--p", "2/5"}).code, 64);
  EXPECT_EQ(run({"eval", "--bound", "quarter", "--n", "10"}).code, 64);
}
