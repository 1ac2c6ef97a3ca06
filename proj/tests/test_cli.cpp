#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ridgecalc/cli.hpp"
#include "ridgecalc/json_io.hpp"

using namespace ridgecalc;

namespace {

namespace fs = std::filesystem;

std::string fixture(const std::string& name) { return std::string(RIDGECALC_FIXTURE_DIR) + "/" + name; }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ridgecalc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, DemoCfe) {
  const CliRun r = run({"demo", "cfe", "--radicals", "2", "--seed", "0", "--samples", "5"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("A(x) + A(y) - A(x + y) = 0"), std::string::npos);
  EXPECT_EQ(r.out.find("A(x + y) = -"), std::string::npos);
  EXPECT_NE(r.out.find("g_1 = 0\ng_2 = 0\ng_3 = 0\nP = 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("A is not linear"), std::string::npos);
}

TEST_F(CliTest, DemoCfeTameAndInvalid) {
  const CliRun tame = run({"demo", "cfe", "--radicals", "none"});
  EXPECT_EQ(tame.code, kExitOk);
  EXPECT_NE(tame.out.find("tame"), std::string::npos);
  const CliRun bad = run({"demo", "cfe", "--radicals", "4"});
  EXPECT_NE(bad.code, kExitOk);
  EXPECT_NE(bad.err.find("not square-free"), std::string::npos);
}

TEST_F(CliTest, ExtractQuadratic) {
  const CliRun r = run({"extract", "--input", fixture("quadratic_f3.json"), "--target", "3", "--steps", "1,1", "--at", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["value"]["coords"].dump(), R"({"1":"2/1"})");
}

TEST_F(CliTest, ExtractWildTarget) {
  const CliRun r = run({"extract", "--input", fixture("wild_target.json"), "--target", "3", "--steps", "1+sqrt2,-1/3",
                     "--at", "5/2*sqrt2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["value"]["coords"].empty());
}

TEST_F(CliTest, ExtractFloatCrossCheck) {
  const std::string csv = tmp("grid.csv");
  const CliRun r = run({"extract", "--input", fixture("quadratic_f3.json"), "--target", "3", "--steps", "1,1", "--at",
                     "0", "--float", csv, "--output", tmp("value.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = read_json_file(tmp("value.json"));
  EXPECT_EQ(j["float"]["pass"], true);
  EXPECT_EQ(j["float"]["points"], 101);
  const std::string text = slurp(csv);
  EXPECT_EQ(text.rfind("t,exact,float,abs_err\n-2,2,2,0\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 102);

  const CliRun flag_only = run({"extract", "--input", fixture("quadratic_f3.json"), "--target", "3", "--steps", "1,1",
                             "--float"});
  EXPECT_EQ(flag_only.code, kExitOk) << flag_only.err;
  EXPECT_EQ(Json::parse(flag_only.out)["float"]["pass"], true);
}

TEST_F(CliTest, ExtractErrors) {
  EXPECT_EQ(run({"extract", "--input", tmp("missing.json"), "--target", "1", "--steps", "1"}).code, kExitInput);
  EXPECT_EQ(run({"extract", "--input", fixture("malformed.json"), "--target", "1"}).code, kExitInput);
  EXPECT_EQ(run({"extract", "--input", fixture("dependent.json"), "--target", "1", "--steps", "1"}).code,
            kExitGeometry);
  EXPECT_EQ(run({"extract", "--input", fixture("quadratic_f3.json"), "--target", "4", "--steps", "1,1"}).code,
            kExitInput);
  EXPECT_EQ(run({"extract", "--input", fixture("quadratic_f3.json"), "--target", "1", "--steps", "1"}).code,
            kExitInput);
}

TEST_F(CliTest, SmoothCfe) {
  const CliRun r = run({"smooth", "--input", fixture("cfe.json"), "--output", tmp("sol.json"), "--samples", "20"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = read_json_file(tmp("sol.json"));
  EXPECT_TRUE(j["P"]["coeffs"].empty());
  EXPECT_EQ(j["certificate"]["exact"], true);
  EXPECT_EQ(j["certificate"]["extends_beyond_Q"], true);
  EXPECT_EQ(j["certificate"]["rational_points"], 20);
  for (const auto& g : j["g"]) EXPECT_TRUE(g.empty());
}

TEST_F(CliTest, SmoothIsDeterministic) {
  ASSERT_EQ(run({"smooth", "--input", fixture("quadratic_cancel.json"), "--output", tmp("a.json"), "--seed", "7"}).code,
            kExitOk);
  ASSERT_EQ(run({"smooth", "--input", fixture("quadratic_cancel.json"), "--output", tmp("b.json"), "--seed", "7"}).code,
            kExitOk);
  EXPECT_EQ(slurp(tmp("a.json")), slurp(tmp("b.json")));
  EXPECT_EQ(run({"demo", "cfe", "--seed", "3"}).out, run({"demo", "cfe", "--seed", "3"}).out);
}

TEST_F(CliTest, DecomposePoly) {
  const CliRun r = run({"decompose-poly", "--input", fixture("xy.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["p"].size(), 3u);
  const char* expected[] = {"-1/2", "-1/2", "1/2"};
  for (int i = 0; i < 3; ++i) {
    ASSERT_EQ(j["p"][i].size(), 3u);
    EXPECT_TRUE(j["p"][i][0]["coords"].empty());
    EXPECT_TRUE(j["p"][i][1]["coords"].empty());
    EXPECT_EQ(j["p"][i][2]["coords"]["1"], expected[i]);
  }
  const CliRun infeasible = run({"decompose-poly", "--input", fixture("xy_two_directions.json")});
  EXPECT_EQ(infeasible.code, kExitInfeasible);
  EXPECT_FALSE(infeasible.err.empty());
}

TEST_F(CliTest, VerifyRoundTrip) {
  ASSERT_EQ(run({"smooth", "--input", fixture("quadratic_cancel.json"), "--output", tmp("sol.json")}).code, kExitOk);
  const CliRun ok = run({"verify", "--input", tmp("sol.json"), "--samples", "20", "--tol", "1e-8"});
  EXPECT_EQ(ok.code, kExitOk) << ok.out << ok.err;
  EXPECT_NE(ok.out.find("verify: PASS"), std::string::npos);
}

TEST_F(CliTest, VerifyTampered) {
  const CliRun r = run({"verify", "--input", fixture("tampered_solution.json")});
  EXPECT_EQ(r.code, kExitVerification);
  EXPECT_NE(r.out.find("verify: FAIL"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(run({"smooth"}).code, kExitInput);
  EXPECT_EQ(run({"smooth", "--input", fixture("cfe.json"), "--samples", "0"}).code, kExitInput);
  EXPECT_EQ(run({"verify", "--input", fixture("tampered_solution.json"), "--tol", "0"}).code, kExitInput);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}
