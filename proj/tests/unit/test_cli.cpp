#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string output;  // stdout and stderr together
};

Outcome cli(const std::string& args) {
  const std::string cmd = std::string(CESEPLAST_CLI) + " " + args + " 2>&1";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) o.output.append(buf, n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ceseplast_cli_test" / name;
  fs::remove_all(dir);
  return dir;
}

bool has(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

const std::string configs = CESEPLAST_CONFIG_DIR;

}  // namespace

TEST(Cli, ListsScenarios) {
  const Outcome o = cli("scenarios");
  EXPECT_EQ(o.code, 0);
  for (const char* name : {"impact40", "multiyield4", "finite_bar", "ultrasonic_subyield"}) {
    EXPECT_TRUE(has(o.output, name)) << name;
  }
}

TEST(Cli, ShowsBuiltinConfigMatchingShippedFile) {
  const Outcome o = cli("scenarios --show impact40");
  ASSERT_EQ(o.code, 0);
  std::ifstream f(configs + "/impact40.cfg");
  EXPECT_EQ(nlohmann::json::parse(o.output), nlohmann::json::parse(f));
}

TEST(Cli, RunFromConfigFile) {
  const fs::path out = fresh_dir("run");
  const Outcome o = cli("run --config " + configs + "/impact40.cfg --out " + out.string() +
                        " --set time.t_end=3e-5");
  ASSERT_EQ(o.code, 0) << o.output;
  EXPECT_TRUE(has(o.output, "impact: 50 steps"));
  EXPECT_TRUE(fs::exists(out / "manifest"));
  EXPECT_TRUE(fs::exists(out / "report.json"));
  EXPECT_TRUE(fs::exists(out / "snap_00000050.csv"));
}

TEST(Cli, RunBuiltinWithCadenceQuietly) {
  const fs::path out = fresh_dir("builtin");
  const Outcome o = cli("run --scenario impact40 --quiet --snapshot-every 5 --set time.t_end=6e-6 --out " +
                        out.string());
  ASSERT_EQ(o.code, 0) << o.output;
  EXPECT_TRUE(o.output.empty()) << o.output;
  EXPECT_TRUE(fs::exists(out / "snap_00000005.csv"));
  EXPECT_TRUE(fs::exists(out / "snap_00000010.csv"));
}

TEST(Cli, MissingConfigFileNamesPath) {
  const Outcome o = cli("run --config /no/such/file.cfg");
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(has(o.output, "/no/such/file.cfg")) << o.output;
}

TEST(Cli, BadOverrideNamesKey) {
  const Outcome o = cli("run --scenario impact40 --set material.bogus=1 --out " +
                        fresh_dir("bad").string());
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(has(o.output, "material.bogus")) << o.output;
}

TEST(Cli, MalformedConfigFile) {
  const fs::path dir = fresh_dir("malformed");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "broken.cfg");
    f << "{\"grid\": ";
  }
  const Outcome o = cli("run --config " + (dir / "broken.cfg").string());
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(has(o.output, "broken.cfg")) << o.output;
}

TEST(Cli, RunNeedsASource) {
  const Outcome o = cli("run");
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(has(o.output, "--config")) << o.output;
}

TEST(Cli, UnknownScenarioName) {
  const Outcome o = cli("run --scenario nope");
  EXPECT_EQ(o.code, 1);
  EXPECT_TRUE(has(o.output, "nope")) << o.output;
}

TEST(Cli, VerifySpeedsPasses) {
  const Outcome o = cli("verify speeds");
  EXPECT_EQ(o.code, 0) << o.output;
  EXPECT_TRUE(has(o.output, "suite speeds: PASS")) << o.output;
}

TEST(Cli, VerifyUnknownSuite) {
  const Outcome o = cli("verify everything");
  EXPECT_EQ(o.code, 1);
}

TEST(Cli, NoSubcommand) { EXPECT_EQ(cli("").code, 1); }
