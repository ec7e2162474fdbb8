/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_HARNESS_EXPERIMENT_HPP
#define DQNAF_HARNESS_EXPERIMENT_HPP

#include "dqnaf/harness/network.hpp"

#include <filesystem>
#include <map>

namespace dqnaf::harness {

class EmptyInput : public std::invalid_argument
{
public:
  EmptyInput()
    : std::invalid_argument("cannot aggregate zero runs")
  {
  }
};

class MixedDurations : public std::invalid_argument
{
public:
  MixedDurations()
    : std::invalid_argument("runs have different durations")
  {
  }
};

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Where a persist-mode chain keeps the parameters saved at the end of run `run`.
std::filesystem::path
weightsPath(const ScenarioConfig& cfg, uint32_t run);

/**
 * Builds and runs one replication. Runs are numbered from 1.
 *
 * In persist mode a DQN-AF run k > 1 starts from the parameters saved by run k-1,
 * and every DQN-AF run saves its final parameters.
 */
RunMetrics
runExperiment(const ScenarioConfig& cfg, uint32_t run);

/**
 * Runs cfg.runs replications of every config on up to `jobs` worker threads.
 *
 * Fresh-mode runs are independent tasks; a persist-mode config is one sequential
 * chain. The result holds, per config, its runs in run order, whatever `jobs` is.
 */
std::vector<std::vector<RunMetrics>>
runBatch(const std::vector<ScenarioConfig>& cfgs, unsigned jobs);

struct MetricSummary
{
  double mean = 0.0;
  double stddev = 0.0;
};

struct Summary
{
  std::string strategy;
  size_t n = 0;
  size_t seconds = 0;
  /// Keyed by metric name: data_rx, interests_tx_total, interests_tx_f2, interests_tx_f3.
  std::map<std::string, MetricSummary> metrics;
  /// Per-second means across runs, same keys.
  std::map<std::string, std::vector<double>> series;
};

/// Mean and sample standard deviation of the per-run means; one run gives stddev 0.
Summary
aggregate(const std::vector<RunMetrics>& runs);

/// Metric names in CSV column order.
const std::vector<std::string>&
metricNames();

/// Writes runs.csv, summary.csv and series.csv into dir, creating it if needed.
void
writeCsv(const std::vector<Summary>& summaries, const std::vector<std::vector<RunMetrics>>& runs,
         const std::filesystem::path& dir);

} // namespace dqnaf::harness

#endif // DQNAF_HARNESS_EXPERIMENT_HPP
