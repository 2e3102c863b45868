#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ceseplast/config.hpp"
#include "ceseplast/errors.hpp"
#include "ceseplast/runner.hpp"
#include "ceseplast/scenario.hpp"
#include "ceseplast/verify.hpp"

namespace cp = ceseplast;

namespace {

constexpr int kRunFailure = 1;
constexpr int kVerifyFailure = 2;

struct RunArgs {
  std::string config;
  std::string scenario;
  std::vector<std::string> sets;
  std::string out;
  std::optional<std::size_t> snapshot_every;
  bool quiet = false;
};

void print_report(const cp::RunResult& r) {
  const cp::RunReport& rep = r.report;
  std::printf("%s: %zu steps in %.3f s, max CFL %.4f, %zu snapshots\n",
              cp::to_string(rep.kind), rep.steps, rep.wall_time, rep.cfl_max,
              r.snapshots.size());
  for (const auto& f : rep.fronts) {
    std::printf("  front at x = %.5f m, speed %.2f m/s (dT11/dx %s)\n", f.position, f.speed,
                f.sign > 0 ? "+" : "-");
  }
  if (rep.plateau) {
    std::printf("  plateau [%.4f, %.4f] m: rho %.2f, v %.4f, t11 %.5g, p %.5g\n",
                rep.plateau->x_begin, rep.plateau->x_end, rep.plateau->rho.mean,
                rep.plateau->v.mean, rep.plateau->t11.mean, rep.plateau->p.mean);
  }
  for (const auto& d : rep.deltas) {
    std::printf("  %-22s measured %.6g  oracle %.6g  (%+.3f%%)\n", d.quantity.c_str(),
                d.measured, d.expected, 100.0 * d.relative_error());
  }
  if (rep.probe) {
    std::printf("  probe x = %.3f m over %zu periods: H1 %.5g m/s, H3/H1 %.4g%%\n",
                rep.probe->position, rep.probe->periods, rep.probe->harmonics.at(0),
                100.0 * rep.probe->distortion());
  }
}

int cmd_run(const RunArgs& a) {
  cp::ScenarioConfig cfg;
  if (!a.scenario.empty()) {
    cfg = cp::parse_config(cp::to_config_text(cp::find_builtin(a.scenario).config), a.sets);
  } else {
    cfg = cp::read_config(a.config, a.sets);
  }
  if (!a.out.empty()) cfg.output.directory = a.out;
  if (a.snapshot_every) cfg.output.snapshot_every_steps = *a.snapshot_every;

  cp::RunOutput out;
  out.directory = cfg.output.directory;
  if (!a.quiet) out.log = &std::cerr;
  const cp::RunResult r = cp::run_scenario(cfg, out);
  if (!a.quiet) {
    print_report(r);
    std::printf("wrote %s\n", cfg.output.directory.c_str());
  }
  return 0;
}

int cmd_verify(const std::string& suite, bool quiet) {
  const cp::SuiteResult res = cp::run_suite(suite);
  for (const auto& c : res.checks) {
    if (!quiet || !c.passed()) {
      std::printf("%s %s\n", c.passed() ? "PASS" : "FAIL", c.describe().c_str());
    }
  }
  std::printf("suite %s: %s\n", res.suite.c_str(), res.passed() ? "PASS" : "FAIL");
  return res.passed() ? 0 : kVerifyFailure;
}

int cmd_scenarios(const std::string& show) {
  if (!show.empty()) {
    std::cout << cp::to_config_text(cp::find_builtin(show).config);
    return 0;
  }
  for (const auto& b : cp::builtin_scenarios()) {
    std::printf("%-20s %s\n", b.name.c_str(), b.summary.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-D elastic-plastic wave solver"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a scenario and write snapshots, manifest and report");
  auto* config_opt = run->add_option("--config", run_args.config, "Scenario config file")
                         ->check(CLI::ExistingFile);
  auto* scenario_opt =
      run->add_option("--scenario", run_args.scenario, "Built-in scenario name instead of a file");
  config_opt->excludes(scenario_opt);
  run->add_option("--set", run_args.sets, "Override a config value, e.g. solver.alpha=0")
      ->allow_extra_args(false);
  run->add_option("--out", run_args.out, "Output directory (default: output.directory)");
  run->add_option("--snapshot-every", run_args.snapshot_every, "Snapshot cadence in steps");
  run->add_flag("--quiet,-q", run_args.quiet, "Only report errors");

  std::string suite;
  bool verify_quiet = false;
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite against the oracles");
  verify->add_option("suite", suite, "speeds, plateaus or convergence")
      ->required()
      ->check(CLI::IsMember(cp::suite_names()));
  verify->add_flag("--quiet,-q", verify_quiet, "Only print failures and the verdict");

  std::string show;
  auto* scenarios = app.add_subcommand("scenarios", "List built-in scenarios");
  scenarios->add_option("--show", show, "Print the config of one built-in");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kRunFailure;
  }

  try {
    if (*run) {
      if (run_args.config.empty() && run_args.scenario.empty()) {
        std::cerr << "error: run needs --config PATH or --scenario NAME\n";
        return kRunFailure;
      }
      return cmd_run(run_args);
    }
    if (*verify) return cmd_verify(suite, verify_quiet);
    return cmd_scenarios(show);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRunFailure;
  }
}
