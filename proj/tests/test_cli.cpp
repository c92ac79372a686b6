#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "skw/commands.hpp"
#include "skw/json_io.hpp"

namespace skw {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const char* name) { return std::string(SKW_TEST_DATA) + "/" + name; }

RunConfig config(const std::string& entry, int points, std::uint64_t seed, std::optional<double> tol = {}) {
  RunConfig c;
  c.entry = entry;
  c.points = points;
  c.seed = seed;
  c.tol = tol;
  return c;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SKW_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Verify, QuadraticTightTolerance) {
  const CommandResult r = cmd_verify(config("quadratic", 8, 1, 1e-8));
  EXPECT_EQ(r.exit_code, kPass);
  const Json j = parse_json_text(r.json);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["points"].size(), 8u);
}

TEST(Verify, CubicManyPoints) {
  const CommandResult r = cmd_verify(config("cubic", 64, 7, 1e-5));
  EXPECT_EQ(r.exit_code, kPass);
  EXPECT_TRUE(parse_json_text(r.json)["failures"].empty());
}

TEST(Verify, UnknownEntryIsAUsageError) {
  const CommandResult r = cmd_verify(config("nosuch", 8, 1));
  EXPECT_EQ(r.exit_code, kUsageError);
  const Json j = parse_json_text(r.json);
  EXPECT_EQ(j["error"]["code"], "invalid_argument");
}

TEST(Verify, ByteIdenticalAcrossRuns) {
  const RunConfig c = config("swlog", 6, 99);
  EXPECT_EQ(cmd_verify(c).json, cmd_verify(c).json);
}

TEST(Verify, SeedChangesThePoints) {
  EXPECT_NE(cmd_verify(config("cubic", 2, 1)).json, cmd_verify(config("cubic", 2, 2)).json);
}

TEST(Rees, DataFiles) {
  const CommandResult pure = cmd_rees("split", read_file(data("pure_weight1_c2.json")), std::nullopt);
  EXPECT_EQ(pure.exit_code, kPass);
  EXPECT_EQ(parse_json_text(pure.json)["splitting"], Json::parse("[1, 1]"));
  EXPECT_EQ(parse_json_text(pure.json)["semistable_of"], Json::parse("[1]"));

  const CommandResult impure = cmd_rees("split", read_file(data("impure_c2.json")), std::nullopt);
  const Json j = parse_json_text(impure.json);
  EXPECT_EQ(j["splitting"], Json::parse("[2, 0]"));
  EXPECT_EQ(j["h0_from_0_down"], Json::parse("[4, 2, 1, 0, 0]"));

  EXPECT_EQ(cmd_rees("split", read_file(data("empty_steps.json")), std::nullopt).exit_code, kDataError);
  EXPECT_EQ(cmd_rees("split", read_file(data("malformed.json")), std::nullopt).exit_code, kUsageError);
}

TEST(Rees, PurityAgreement) {
  const CommandResult pure = cmd_rees("purity", read_file(data("pure_weight1_c2.json")), 1);
  EXPECT_EQ(pure.exit_code, kPass);
  const Json j = parse_json_text(pure.json);
  EXPECT_TRUE(j["pure"].get<bool>());
  EXPECT_TRUE(j["agree"].get<bool>());
  const Json k = parse_json_text(cmd_rees("purity", read_file(data("impure_c2.json")), 1).json);
  EXPECT_FALSE(k["pure"].get<bool>());
  EXPECT_TRUE(k["agree"].get<bool>());
}

TEST(Hk, QuadraticCheckIsExact) {
  const CommandResult r = cmd_hk("check", config("quadratic", 8, 1));
  EXPECT_EQ(r.exit_code, kPass);
  EXPECT_LT(parse_json_text(r.json)["max_residual"].get<double>(), 1e-10);
}

TEST(Hk, CorrespondenceCubic) {
  EXPECT_EQ(cmd_hk("correspondence", config("cubic", 16, 1)).exit_code, kPass);
}

TEST(Hk, NijenhuisSwlog) { EXPECT_EQ(cmd_hk("nijenhuis", config("swlog", 2, 3)).exit_code, kPass); }

TEST(Twistor, NormalBundleSwlog) {
  const CommandResult r = cmd_twistor("normal-bundle", config("swlog", 8, 1));
  EXPECT_EQ(r.exit_code, kPass);
  for (const auto& p : parse_json_text(r.json)["points"]) EXPECT_EQ(p["splitting"], Json::parse("[1, 1]"));
}

TEST(Catalog, ListsEntries) {
  const Json j = parse_json_text(cmd_catalog().json);
  EXPECT_GE(j["entries"].size(), 4u);
}

TEST(JsonWriter, RoundTripsDoublesExactly) {
  Json j;
  j["x"] = 0.1;
  j["v"] = Json::array({1.0 / 3.0, 1e-300});
  const std::string s = write_json(j);
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
  const Json back = parse_json_text(s);
  EXPECT_EQ(back["v"][0].get<double>(), 1.0 / 3.0);
  EXPECT_EQ(s.back(), '\n');
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_binary("verify --entry quadratic --points 2"), 0);
  EXPECT_EQ(run_binary("verify --entry nosuch"), 2);
  EXPECT_EQ(run_binary("frobnicate"), 2);
  EXPECT_EQ(run_binary("rees split " + data("empty_steps.json")), 4);
  EXPECT_EQ(run_binary("rees split " + data("malformed.json")), 2);
}

TEST(Binary, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "skw_out.json";
  ASSERT_EQ(run_binary("catalog --out " + path), 0);
  EXPECT_EQ(read_file(path), cmd_catalog().json);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace skw
