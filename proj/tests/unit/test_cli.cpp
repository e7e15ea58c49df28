#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "tsallis/serialization.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tsallis-verify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tsallis::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tsallis_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, Version) {
  const Result r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tsallis-verify 1.0.0"), std::string::npos);
  EXPECT_NE(r.out.find("report schema 1"), std::string::npos);
}

TEST(Cli, BadUsageIsExitTwo) {
  EXPECT_EQ(run({"verify", "--trials", "abc"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "NOPE", "--trials", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--fn", "ln_v"}).code, 2);  // missing --x
}

TEST(Cli, EvalScalar) {
  Result r = run({"eval", "--fn", "compare_fv", "--s", "0.1", "--t", "1", "--v", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("f=1.0109"), std::string::npos) << r.out;
  r = run({"eval", "--fn", "ln_v", "--x", "4", "--v", "0.5", "--format", "json"});
  EXPECT_EQ(r.out, "{\"fn\":\"ln_v\",\"value\":2.0}\n");
  r = run({"eval", "--fn", "ln_v", "--x", "-1", "--v", "0.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, EvalMatrix) {
  const fs::path a = scratch("a.json"), b = scratch("b.json");
  write(a, R"({"dim": 2, "data": [1, 0, 0, 2]})");
  write(b, R"({"dim": 2, "data": [2, 0, 0, 6]})");
  const Result r = run({"eval", "--fn", "exp_entropy", "--A", a.string(), "--B", b.string(),
                        "--v", "0.5", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"eigenvalues\":[4.0,12.49999999999999"), std::string::npos) << r.out;
  write(b, R"({"dim": 2, "data": [2, 1, 0, 6]})");
  EXPECT_EQ(run({"eval", "--fn", "relative", "--A", a.string(), "--B", b.string()}).code, 2);
}

TEST(Cli, GenIsDeterministicAndHonoursSeedEnv) {
  const Result a = run({"gen", "--dim", "3", "--seed", "7", "--constraint", "certified-window",
                        "--window", "0.5,2"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(run({"gen", "--dim", "3", "--seed", "7", "--constraint", "certified-window",
                 "--window", "0.5,2"}).out,
            a.out);
  ::setenv("TSALLIS_SEED", "7", 1);
  const Result env = run({"gen", "--dim", "3", "--constraint", "certified-window", "--window", "0.5,2"});
  ::setenv("TSALLIS_SEED", "8", 1);
  const Result other = run({"gen", "--dim", "3", "--constraint", "certified-window", "--window", "0.5,2"});
  ::unsetenv("TSALLIS_SEED");
  EXPECT_EQ(env.out, a.out);
  EXPECT_NE(other.out, a.out);
  EXPECT_EQ(run({"gen", "--dim", "2", "--constraint", "ratio-K", "--window", "0.5,1.5", "--v", "-0.5"}).code, 2);
}

TEST(Cli, GenCaseThenReplay) {
  const fs::path p = scratch("case.json");
  ASSERT_EQ(run({"gen", "--case", "KNOWN_BOUNDS_T", "--dim", "3", "--v", "0.5", "--seed", "3",
                 "--out", p.string()}).code,
            0);
  const tsallis::InequalityCase c = tsallis::case_from_json(read(p));
  EXPECT_EQ(c.id, tsallis::InequalityId::kKnownBoundsT);
  Result r = run({"replay", p.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("HOLDS"), std::string::npos);
  r = run({"verify", "--replay", p.string(), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"overall_holds\": true"), std::string::npos);
}

TEST(Cli, VerifyPersistsFailuresForReplay) {
  const fs::path report = scratch("report.json");
  const fs::path cases = scratch("cases");
  fs::remove_all(cases);
  const Result r = run({"verify", "--suite", "RATIO_K", "--dims", "2", "--v-grid", "0.5", "--trials", "10",
                        "--format", "json", "--out", report.string(), "--cases-dir", cases.string()});
  EXPECT_EQ(r.code, 1);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(cases)) files.push_back(e.path());
  ASSERT_FALSE(files.empty());
  EXPECT_EQ(run({"replay", files.front().string()}).code, 1);
  EXPECT_NE(read(report).find("\"RATIO_K\""), std::string::npos);
}

TEST(Cli, VerifyPassingSuite) {
  const Result r = run({"verify", "--suite", "KNOWN_BOUNDS_S", "--dims", "2,3", "--trials", "5",
                        "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("suite,id,asserted", 0), 0u);
}

}  // namespace
