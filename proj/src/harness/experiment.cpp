/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/harness/experiment.hpp"

#include "dqnaf/neural/param-io.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

namespace dqnaf::harness {

namespace {

bool
isDqn(const ScenarioConfig& cfg)
{
  return cfg.strategy.name.starts_with("dqn-af");
}

const std::vector<uint64_t>&
seriesOf(const RunMetrics& m, size_t metric)
{
  static const std::vector<uint64_t> empty;
  switch (metric) {
    case 0:
      return m.dataRx;
    case 1:
      return m.interestsTx;
    default:
      return metric - 2 < m.interestsTxPerFace.size() ? m.interestsTxPerFace[metric - 2] : empty;
  }
}

uint64_t
valueAt(const RunMetrics& m, size_t metric, size_t second)
{
  const auto& s = seriesOf(m, metric);
  return second < s.size() ? s[second] : 0;
}

std::string
fixed(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::ofstream
openCsv(const std::filesystem::path& path)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  return out;
}

void
closeCsv(std::ofstream& out, const std::filesystem::path& path)
{
  out.close();
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

} // namespace

std::filesystem::path
weightsPath(const ScenarioConfig& cfg, uint32_t run)
{
  return cfg.outputDir / "weights" / (cfg.strategy.name + "-run" + std::to_string(run) + ".dqaf");
}

RunMetrics
runExperiment(const ScenarioConfig& cfg, uint32_t run)
{
  const bool persist = cfg.weightMode == WeightMode::PERSIST && isDqn(cfg);

  std::optional<neural::Mlp> initial;
  if (persist && run > 1) {
    initial = neural::loadParams(weightsPath(cfg, run - 1));
  }

  Network net(cfg, run, std::move(initial));
  net.run();

  if (persist && net.dqnStrategy() != nullptr) {
    auto path = weightsPath(cfg, run);
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
    neural::saveParams(net.dqnStrategy()->agent().network(), path);
  }
  return net.metrics();
}

std::vector<std::vector<RunMetrics>>
runBatch(const std::vector<ScenarioConfig>& cfgs, unsigned jobs)
{
  struct Task
  {
    size_t cfg;
    uint32_t firstRun;
    uint32_t lastRun;
  };

  std::vector<std::vector<RunMetrics>> results(cfgs.size());
  std::vector<Task> tasks;
  for (size_t i = 0; i < cfgs.size(); ++i) {
    results[i].resize(cfgs[i].runs);
    if (cfgs[i].weightMode == WeightMode::PERSIST && isDqn(cfgs[i])) {
      tasks.push_back({i, 1, cfgs[i].runs});
    }
    else {
      for (uint32_t r = 1; r <= cfgs[i].runs; ++r) {
        tasks.push_back({i, r, r});
      }
    }
  }

  std::atomic<size_t> next{0};
  std::mutex errorMutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      try {
        for (uint32_t r = task.firstRun; r <= task.lastRun; ++r) {
          results[task.cfg][r - 1] = runExperiment(cfgs[task.cfg], r);
        }
      }
      catch (...) {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (!error) {
          error = std::current_exception();
        }
        next = tasks.size();
      }
    }
  };

  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  }
  else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return results;
}

const std::vector<std::string>&
metricNames()
{
  static const std::vector<std::string> names = {
    "data_rx", "interests_tx_total", "interests_tx_f2", "interests_tx_f3",
  };
  return names;
}

Summary
aggregate(const std::vector<RunMetrics>& runs)
{
  if (runs.empty()) {
    throw EmptyInput();
  }
  const size_t secs = runs.front().seconds();
  for (const auto& r : runs) {
    if (r.seconds() != secs) {
      throw MixedDurations();
    }
  }

  Summary s;
  s.strategy = runs.front().strategy;
  s.n = runs.size();
  s.seconds = secs;
  const auto n = static_cast<double>(runs.size());

  for (size_t m = 0; m < metricNames().size(); ++m) {
    std::vector<double> perRun;
    for (const auto& r : runs) {
      double total = 0.0;
      for (size_t k = 0; k < secs; ++k) {
        total += static_cast<double>(valueAt(r, m, k));
      }
      perRun.push_back(secs == 0 ? 0.0 : total / static_cast<double>(secs));
    }
    double mean = 0.0;
    for (double v : perRun) {
      mean += v;
    }
    mean /= n;
    double ss = 0.0;
    for (double v : perRun) {
      ss += (v - mean) * (v - mean);
    }
    double stddev = runs.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
    s.metrics[metricNames()[m]] = {mean, stddev};

    std::vector<double> series(secs, 0.0);
    for (size_t k = 0; k < secs; ++k) {
      for (const auto& r : runs) {
        series[k] += static_cast<double>(valueAt(r, m, k));
      }
      series[k] /= n;
    }
    s.series[metricNames()[m]] = std::move(series);
  }
  return s;
}

void
writeCsv(const std::vector<Summary>& summaries, const std::vector<std::vector<RunMetrics>>& runs,
         const std::filesystem::path& dir)
{
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string());
  }

  auto runsPath = dir / "runs.csv";
  auto out = openCsv(runsPath);
  out << "strategy,run,second,data_rx,interests_tx_total,interests_tx_f2,interests_tx_f3\n";
  for (const auto& group : runs) {
    for (const auto& r : group) {
      for (size_t k = 0; k < r.seconds(); ++k) {
        out << r.strategy << ',' << r.run << ',' << k;
        for (size_t m = 0; m < metricNames().size(); ++m) {
          out << ',' << valueAt(r, m, k);
        }
        out << '\n';
      }
    }
  }
  closeCsv(out, runsPath);

  auto summaryPath = dir / "summary.csv";
  out = openCsv(summaryPath);
  out << "strategy,metric,mean,stddev,n\n";
  for (const auto& s : summaries) {
    for (const auto& name : metricNames()) {
      const auto& m = s.metrics.at(name);
      out << s.strategy << ',' << name << ',' << fixed(m.mean) << ',' << fixed(m.stddev) << ','
          << s.n << '\n';
    }
  }
  closeCsv(out, summaryPath);

  auto seriesPath = dir / "series.csv";
  out = openCsv(seriesPath);
  out << "strategy,second,data_rx,interests_tx_total,interests_tx_f2,interests_tx_f3\n";
  for (const auto& s : summaries) {
    for (size_t k = 0; k < s.seconds; ++k) {
      out << s.strategy << ',' << k;
      for (const auto& name : metricNames()) {
        out << ',' << fixed(s.series.at(name)[k]);
      }
      out << '\n';
    }
  }
  closeCsv(out, seriesPath);
}

} // namespace dqnaf::harness
