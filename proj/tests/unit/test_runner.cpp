#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ceseplast/errors.hpp"
#include "ceseplast/runner.hpp"
#include "ceseplast/scenario.hpp"
#include "copper.hpp"

using namespace ceseplast;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ceseplast_runner_test" / name;
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const OracleDelta* delta(const RunReport& r, const std::string& q) {
  for (const auto& d : r.deltas) {
    if (d.quantity == q) return &d;
  }
  return nullptr;
}

}  // namespace

TEST(OracleDeltaTest, RelativeError) {
  EXPECT_DOUBLE_EQ((OracleDelta{"q", 99.0, 100.0}).relative_error(), -0.01);
  EXPECT_DOUBLE_EQ((OracleDelta{"q", -101.0, -100.0}).relative_error(), -0.01);
  EXPECT_EQ((OracleDelta{"q", 3.0, 0.0}).relative_error(), 3.0);
}

TEST(ProbeSpectrumTest, SyntheticSignal) {
  const double w = 1e5;
  const double period = 2.0 * std::numbers::pi / w;
  const double dt = period / 100.0;
  std::vector<double> v;
  for (int k = 0; k < 700; ++k) {
    const double t = k * dt;
    v.push_back(1.5 * std::sin(w * t) + 0.03 * std::sin(3.0 * w * t + 1.0));
  }
  const auto ps = probe_spectrum(v, 0.0, dt, w, 1e-5);
  ASSERT_TRUE(ps.has_value());
  EXPECT_EQ(ps->periods, 5u);
  EXPECT_GE(ps->t_begin, 1e-5 + period);
  ASSERT_EQ(ps->harmonics.size(), 5u);
  EXPECT_NEAR(ps->harmonics[0], 1.5, 1e-9);
  EXPECT_NEAR(ps->harmonics[1], 0.0, 1e-9);
  EXPECT_NEAR(ps->distortion(), 0.02, 1e-9);
}

TEST(ProbeSpectrumTest, TooShortRecord) {
  const double w = 1e5;
  std::vector<double> v(150, 1.0);
  EXPECT_FALSE(probe_spectrum(v, 0.0, 6e-7, w, 0.0).has_value());
  EXPECT_FALSE(probe_spectrum({}, 0.0, 6e-7, w, 0.0).has_value());
  EXPECT_EQ(ProbeSpectrum{}.distortion(), 0.0);
}

TEST(RunScenario, ImpactWritesArtifacts) {
  const fs::path dir = fresh_dir("impact");
  const ScenarioConfig& cfg = find_builtin("impact40").config;
  const RunResult r = run_scenario(cfg, {dir, nullptr});

  EXPECT_EQ(r.manifest.steps, 284u);
  EXPECT_EQ(r.manifest.status, "ok");
  EXPECT_NEAR(r.manifest.cfl_max, 0.5679 * (1.0 + 40.0 / 4732.49), 0.01);
  // Steps 0, 20, ..., 280 and the final 284.
  ASSERT_EQ(r.snapshots.size(), 16u);
  EXPECT_EQ(r.snapshots.back().step, 284u);
  for (const auto& e : r.manifest.snapshots) EXPECT_TRUE(fs::exists(dir / e.file)) << e.file;
  EXPECT_TRUE(fs::exists(dir / "run.log"));

  const RunManifest m = RunManifest::read(dir / "manifest");
  EXPECT_EQ(m.snapshots.size(), 16u);
  EXPECT_EQ(parse_config(m.config_text), cfg);

  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(report["kind"], "impact");
  EXPECT_EQ(report["steps"], 284);
  EXPECT_FALSE(report["plateau"].is_null());

  const OracleDelta* el = delta(r.report, "elastic_front_speed");
  ASSERT_NE(el, nullptr);
  EXPECT_LE(std::abs(el->relative_error()), 0.02);
  const OracleDelta* plateau = delta(r.report, "plateau_t11");
  ASSERT_NE(plateau, nullptr);
  EXPECT_LE(std::abs(plateau->relative_error()), 0.05);
}

TEST(RunScenario, InMemoryRunWritesNothing) {
  ScenarioConfig cfg = find_builtin("impact40").config;
  cfg.time.t_end = 3e-5;
  const RunResult r = run_scenario(cfg);
  EXPECT_EQ(r.manifest.steps, 50u);
  EXPECT_TRUE(r.manifest.snapshots.empty());
  EXPECT_EQ(r.snapshots.size(), 4u);  // 0, 20, 40, 50
  EXPECT_FALSE(r.probe.has_value());
}

TEST(RunScenario, BitIdenticalAcrossRuns) {
  ScenarioConfig cfg = find_builtin("impact40").config;
  cfg.time.t_end = 6e-5;
  const fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
  run_scenario(cfg, {a, nullptr});
  run_scenario(cfg, {b, nullptr});
  for (const auto& entry : fs::directory_iterator(a)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("snap_", 0) != 0) continue;
    EXPECT_EQ(slurp(entry.path()), slurp(b / name)) << name;
  }
}

TEST(RunScenario, FailureRecordedInManifest) {
  ScenarioConfig cfg = find_builtin("impact40").config;
  // Passes the at-rest check but the moving bar pushes the CFL past 1.
  cfg.time.dt = 0.995 * cfg.grid.dx() / copper::elastic_speed();
  const fs::path dir = fresh_dir("failure");
  EXPECT_THROW(run_scenario(cfg, {dir, nullptr}), CflViolation);
  const RunManifest m = RunManifest::read(dir / "manifest");
  EXPECT_EQ(m.status.rfind("failed: ", 0), 0u) << m.status;
  EXPECT_NE(m.status.find("CFL"), std::string::npos) << m.status;
}

TEST(RunScenario, InvalidConfigRejectedUpFront) {
  ScenarioConfig cfg = find_builtin("impact40").config;
  cfg.grid.cells = 2;
  EXPECT_THROW(run_scenario(cfg), ConfigError);
}

TEST(RunScenario, UltrasonicProbeReport) {
  const ScenarioConfig& cfg = find_builtin("ultrasonic_subyield").config;
  const RunResult r = run_scenario(cfg);
  ASSERT_TRUE(r.probe.has_value());
  EXPECT_EQ(r.probe->v.size(), r.manifest.steps + 1);
  ASSERT_TRUE(r.report.probe.has_value());
  const ProbeSpectrum& ps = *r.report.probe;
  EXPECT_EQ(ps.position, 0.3);
  EXPECT_GE(ps.periods, 3u);
  // Linear acoustics: v = F0 / (rho0 c).
  const double v_lin = 5e7 / (copper::rho0 * copper::elastic_speed());
  EXPECT_NEAR(ps.harmonics[0], v_lin, 0.05 * v_lin);
  EXPECT_LT(ps.distortion(), 1e-3);
  const auto j = nlohmann::json::parse(r.report.to_json());
  EXPECT_TRUE(j.contains("probe"));
  EXPECT_NEAR(j["probe"]["distortion"].get<double>(), ps.distortion(), 1e-15);
}
