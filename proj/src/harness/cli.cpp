/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/harness/cli.hpp"
#include "dqnaf/harness/experiment.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <thread>

namespace dqnaf::harness {

namespace {

struct Options
{
  std::string scenario = "scenarios/paper.scenario";
  std::optional<uint64_t> seed;
  std::optional<uint32_t> runs;
  std::optional<std::string> out;
  std::optional<std::string> strategy;
  std::optional<std::string> mode;
  unsigned jobs = 1;
};

void
addCommonFlags(CLI::App& cmd, Options& opt, bool withStrategy)
{
  cmd.add_option("--scenario", opt.scenario, "Scenario file")->capture_default_str();
  cmd.add_option("--seed", opt.seed, "Base seed (overrides the scenario)");
  cmd.add_option("--runs", opt.runs, "Number of replications")->check(CLI::PositiveNumber);
  cmd.add_option("--out", opt.out, "Output directory");
  cmd.add_option("--jobs", opt.jobs, "Parallel replications")->check(CLI::PositiveNumber)->capture_default_str();
  if (withStrategy) {
    cmd.add_option("--strategy", opt.strategy, "Strategy under test");
    cmd.add_option("--mode", opt.mode, "DQN-AF weight mode")->check(CLI::IsMember({"fresh", "persist"}));
  }
}

ScenarioConfig
loadWithOverrides(const Options& opt)
{
  ScenarioConfig cfg = loadScenario(opt.scenario);
  if (opt.seed) {
    cfg.baseSeed = *opt.seed;
  }
  if (opt.runs) {
    cfg.runs = *opt.runs;
  }
  if (opt.out) {
    cfg.outputDir = *opt.out;
  }
  if (opt.strategy) {
    cfg = withStrategy(cfg, *opt.strategy);
  }
  if (opt.mode) {
    cfg.weightMode = *opt.mode == "persist" ? WeightMode::PERSIST : WeightMode::FRESH;
  }
  validateScenario(cfg);
  return cfg;
}

void
printSummaries(const std::vector<Summary>& summaries)
{
  std::printf("%-22s %10s %10s %12s %10s %10s %4s\n", "strategy", "data_rx", "stddev", "interests_tx",
              "tx_f2", "tx_f3", "n");
  for (const auto& s : summaries) {
    std::printf("%-22s %10.2f %10.2f %12.2f %10.2f %10.2f %4zu\n", s.strategy.c_str(),
                s.metrics.at("data_rx").mean, s.metrics.at("data_rx").stddev,
                s.metrics.at("interests_tx_total").mean, s.metrics.at("interests_tx_f2").mean,
                s.metrics.at("interests_tx_f3").mean, s.n);
  }
}

/// Runs every config, relabels the results and writes the CSV files.
std::vector<Summary>
execute(const std::vector<ScenarioConfig>& cfgs, const std::vector<std::string>& labels, unsigned jobs,
        const std::filesystem::path& out)
{
  auto begin = std::chrono::steady_clock::now();
  auto results = runBatch(cfgs, jobs);
  std::vector<Summary> summaries;
  for (size_t i = 0; i < results.size(); ++i) {
    for (auto& r : results[i]) {
      r.strategy = labels[i];
    }
    summaries.push_back(aggregate(results[i]));
  }
  writeCsv(summaries, results, out);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();

  printSummaries(summaries);
  std::printf("wrote %s/{runs,summary,series}.csv in %.1f s\n", out.string().c_str(), elapsed);
  return summaries;
}

int
cmdRun(const Options& opt)
{
  ScenarioConfig cfg = loadWithOverrides(opt);
  std::string label = cfg.strategy.name;
  if (cfg.weightMode == WeightMode::PERSIST && cfg.strategy.name.starts_with("dqn-af")) {
    label += ":persist";
  }
  execute({cfg}, {label}, opt.jobs, cfg.outputDir);
  return EXIT_OK;
}

int
cmdSweep(const Options& opt)
{
  ScenarioConfig base = loadWithOverrides(opt);
  std::vector<ScenarioConfig> cfgs;
  std::vector<std::string> labels;
  for (WeightMode mode : {WeightMode::FRESH, WeightMode::PERSIST}) {
    for (const auto& v : dqnVariants()) {
      std::string name = "dqn-af-" + std::to_string(v.index);
      ScenarioConfig cfg = withStrategy(base, name);
      cfg.weightMode = mode;
      cfgs.push_back(cfg);
      labels.push_back(name + ":" + toString(mode));
    }
  }
  auto summaries = execute(cfgs, labels, opt.jobs, base.outputDir);

  size_t half = summaries.size() / 2;
  for (size_t i = 0; i < half; ++i) {
    double fresh = summaries[i].metrics.at("data_rx").mean;
    double persist = summaries[i + half].metrics.at("data_rx").mean;
    std::printf("%s: persist vs fresh %+.2f%%\n", cfgs[i].strategy.name.c_str(),
                fresh > 0 ? 100.0 * (persist - fresh) / fresh : 0.0);
  }
  return EXIT_OK;
}

int
cmdCompare(const Options& opt)
{
  ScenarioConfig base = loadWithOverrides(opt);
  std::vector<ScenarioConfig> cfgs;
  std::vector<std::string> labels;
  for (const char* name : {"best-route", "multicast", "asf", "dq-learning", "dqn-af-2"}) {
    ScenarioConfig cfg = withStrategy(base, name);
    cfg.weightMode = WeightMode::FRESH;
    cfgs.push_back(cfg);
    labels.push_back(name);
  }
  execute(cfgs, labels, opt.jobs, base.outputDir);
  return EXIT_OK;
}

int
cmdValidate(const Options& opt)
{
  ScenarioConfig cfg = loadWithOverrides(opt);
  std::printf("%s: ok (%zu nodes, %zu links, %zu routes, %zu events, %u runs x %g s, strategy %s)\n",
              opt.scenario.c_str(), cfg.nodes.size(), cfg.links.size(), cfg.routes.size(),
              cfg.events.size(), cfg.runs, cfg.durationS, cfg.strategy.name.c_str());
  return EXIT_OK;
}

} // namespace

int
runCli(int argc, char** argv)
{
  CLI::App app{"Adaptive NDN forwarding simulator"};
  app.require_subcommand(1);

  Options opt;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* run = app.add_subcommand("run", "Run one scenario");
  addCommonFlags(*run, opt, true);
  auto* sweep = app.add_subcommand("sweep", "Run the six DQN-AF variants in both weight modes");
  addCommonFlags(*sweep, opt, false);
  auto* compare = app.add_subcommand("compare", "Run the five forwarding strategies");
  addCommonFlags(*compare, opt, false);
  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("--scenario", opt.scenario, "Scenario file")->capture_default_str();
  validate->add_option("--strategy", opt.strategy, "Strategy under test");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? EXIT_OK : EXIT_VALIDATION;
  }

  try {
    if (*run) {
      return cmdRun(opt);
    }
    if (*sweep) {
      return cmdSweep(opt);
    }
    if (*compare) {
      return cmdCompare(opt);
    }
    return cmdValidate(opt);
  }
  catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_VALIDATION;
  }
  catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_RUNTIME;
  }
}

} // namespace dqnaf::harness
