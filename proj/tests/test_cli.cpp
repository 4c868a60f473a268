#include "bhkit/commands.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace bhkit;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("bhkit_test_" + name); }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(BHKIT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const ResultRecord* find(const RunReport& r, const std::string& name) {
  for (const auto& row : r.results)
    if (row.name == name) return &row;
  return nullptr;
}

}  // namespace

TEST(Report, JsonSchema) {
  RunReport r;
  r.command = "demo";
  r.add(compared("a", 1.0, 1.5, 1.0));
  r.add(checked("b", 2.0, false));
  r.wall_ms = 3.0;
  const auto j = to_json(r);
  EXPECT_EQ(j["command"], "demo");
  EXPECT_EQ(j["version"], kVersion);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["paper"], 1.5);
  EXPECT_EQ(j["results"][0]["diff"], 0.5);
  EXPECT_EQ(j["results"][0]["pass"], true);
  EXPECT_TRUE(j["results"][1]["paper"].is_null());
  EXPECT_TRUE(j["results"][1]["diff"].is_null());
  EXPECT_EQ(j["wall_ms"], 3.0);
  EXPECT_FALSE(to_json(r, false).contains("wall_ms"));
  EXPECT_FALSE(r.pass());

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "version", "results", "wall_ms"}));
}

TEST(Report, RelativeTolerance) {
  EXPECT_TRUE(compared_relative("q", 90.36, 90.35556, 5e-3).pass);
  EXPECT_FALSE(compared_relative("q", 91.0, 90.35556, 5e-3).pass);
  EXPECT_FALSE(compared("nan", NAN, 1.0, 1.0).pass);
}

TEST(Commands, Exact) {
  for (const char* c : {"c2", "r2", "r3", "r6"}) EXPECT_TRUE(cmd_exact(c).pass()) << c;
  const auto r6 = cmd_exact("r6");
  ASSERT_NE(find(r6, "D_R6(F)"), nullptr);
  EXPECT_NEAR(find(r6, "D_R6(F)")->computed, 10.7809, 2e-3);
  EXPECT_THROW(cmd_exact("r4"), std::invalid_argument);
}

TEST(Commands, Quotient) {
  const auto p5 = cmd_quotient_catalog(CatalogId::P5);
  EXPECT_TRUE(p5.pass());
  EXPECT_NEAR(find(p5, "P5 quotient")->computed, 6.83591, 2e-4);
  EXPECT_TRUE(cmd_quotient_catalog(CatalogId::P8).pass());

  const auto custom = cmd_quotient_coeffs("1,0,0,1", 3);
  EXPECT_NEAR(find(custom, "custom quotient")->computed, std::pow(2.0, 2.0 / 3.0) / 2.0, 1e-14);
  CommandOptions f;
  f.mode = Mode::floating;
  EXPECT_NEAR(find(cmd_quotient_coeffs("1, 0, 0, 1", 3, f), "custom quotient")->computed,
              std::pow(2.0, 2.0 / 3.0) / 2.0, 1e-14);
  EXPECT_THROW(cmd_quotient_coeffs("1,,2", 2), std::invalid_argument);
  EXPECT_THROW(cmd_quotient_coeffs("1,abc", 1), std::invalid_argument);
  EXPECT_THROW(cmd_quotient_coeffs("1,2,3", 3), std::invalid_argument);
}

TEST(Commands, Power) {
  EXPECT_TRUE(cmd_power(CatalogId::P2, 300, false).pass());
  EXPECT_TRUE(cmd_power(CatalogId::P8, 75, false).pass());
  EXPECT_TRUE(cmd_power(CatalogId::P6, 100, false).pass());
  EXPECT_THROW(cmd_power(CatalogId::P6, 0, false), std::invalid_argument);

  CommandOptions opt;
  const auto csv = scratch("power.csv");
  opt.csv_path = csv.string();
  EXPECT_TRUE(cmd_power(CatalogId::P10, 60, true, opt).pass());
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "base_id,n,degree,per_degree_root");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 60);
  fs::remove(csv);
}

TEST(Commands, VerifyIdentities) {
  EXPECT_TRUE(cmd_verify("identities").pass());
  EXPECT_THROW(cmd_verify("lemma99"), std::invalid_argument);
}

TEST(Commands, Figures) {
  CommandOptions opt;
  const auto csv = scratch("figure.csv");
  opt.csv_path = csv.string();
  for (const char* id : {"phi-surface", "pab-curve", "qab-curve", "roots-by-degree"}) {
    EXPECT_TRUE(cmd_figure(id, opt).pass()) << id;
    const std::string body = slurp(csv);
    EXPECT_FALSE(body.empty());
    EXPECT_NE(body.find(','), std::string::npos);
  }
  fs::remove(csv);
  EXPECT_THROW(cmd_figure("nope"), std::invalid_argument);
  opt.csv_path = "/nonexistent-dir/x.csv";
  EXPECT_THROW(cmd_figure("pab-curve", opt), std::runtime_error);
}

TEST(Commands, VerifyAllIsDeterministic) {
  CommandOptions opt;
  opt.grid = 256;
  const std::string a = to_json(cmd_verify("all", opt), false).dump();
  opt.threads = 5;
  const std::string b = to_json(cmd_verify("all", opt), false).dump();
  EXPECT_EQ(a, b);
}

TEST(Binary, ExitCodesAndJsonFile) {
  const auto json = scratch("cli.json");
  EXPECT_EQ(run_cli("exact c2 --json " + json.string()), 0);
  const auto j = nlohmann::json::parse(slurp(json));
  EXPECT_EQ(j["command"], "exact c2");
  EXPECT_TRUE(j.contains("wall_ms"));
  fs::remove(json);

  EXPECT_EQ(run_cli("quotient P5 --mode float"), 0);
  EXPECT_EQ(run_cli("quotient --coeffs 1,0,0,1 --degree 3"), 0);
  EXPECT_EQ(run_cli("power P3 --n 200"), 0);
  EXPECT_NE(run_cli("exact r9"), 0);
  EXPECT_NE(run_cli("quotient P4"), 0);
  EXPECT_NE(run_cli("quotient --coeffs 1,x --degree 1"), 0);
  EXPECT_NE(run_cli(""), 0);
  // A k that breaks the case-2 battery must surface as a failing exit code.
  EXPECT_EQ(run_cli("verify lemma21 --grid 128 --k-override 0.5"), 1);
}

TEST(Binary, RepeatedRunsProduceIdenticalJson) {
  const auto first = scratch("det1.json");
  const auto second = scratch("det2.json");
  ASSERT_EQ(run_cli("verify all --json " + first.string()), 0);
  ::setenv("BHKIT_THREADS", "3", 1);
  ASSERT_EQ(run_cli("verify all --json " + second.string()), 0);
  ::unsetenv("BHKIT_THREADS");
  auto a = nlohmann::json::parse(slurp(first));
  auto b = nlohmann::json::parse(slurp(second));
  a.erase("wall_ms");
  b.erase("wall_ms");
  EXPECT_EQ(a.dump(), b.dump());
  fs::remove(first);
  fs::remove(second);
}
