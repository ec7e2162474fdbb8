/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_HARNESS_NETWORK_HPP
#define DQNAF_HARNESS_NETWORK_HPP

#include "dqnaf/dqn/dqn-af-strategy.hpp"
#include "dqnaf/harness/node.hpp"
#include "dqnaf/harness/scenario.hpp"

#include <memory>
#include <optional>

namespace dqnaf::harness {

/// Per-second counters of one run, bin k covering [k, k+1) s.
struct RunMetrics
{
  std::string strategy;
  uint32_t run = 0;
  uint64_t seed = 0;
  std::vector<uint64_t> dataRx;
  std::vector<uint64_t> interestsTx;
  /// One series per nexthop of the measured router, in FIB rank order.
  std::vector<std::vector<uint64_t>> interestsTxPerFace;

  uint64_t consumerInterests = 0;
  uint64_t probesSent = 0;

  size_t
  seconds() const
  {
    return dataRx.size();
  }

  double
  meanDataRx() const;

  double
  meanInterestsTx() const;

  double
  meanInterestsTxFace(size_t rank) const;

  bool
  operator==(const RunMetrics&) const = default;
};

/**
 * One simulation instance built from a scenario: nodes, links, routes, events and
 * strategies, all wired to a private scheduler.
 *
 * Random streams are derived from (base seed, run index, purpose), so traffic and
 * link losses are identical across strategies for the same run.
 */
class Network
{
public:
  /// `initialNet` overrides the fresh initialization of a DQN-AF router.
  Network(const ScenarioConfig& cfg, uint32_t runIndex,
          std::optional<neural::Mlp> initialNet = std::nullopt);

  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  /// Runs the event loop to the scenario's end.
  void
  run();

  /// Advances to t (inclusive) without running to the end; for tests.
  void
  runUntil(Time t);

  RunMetrics
  metrics() const;

  Router&
  router(const std::string& name);

  Router&
  measuredRouter()
  {
    return *m_measured;
  }

  ConsumerApp&
  consumer()
  {
    return *m_consumer;
  }

  ProducerApp&
  producer()
  {
    return *m_producer;
  }

  sim::Link&
  link(const std::string& a, const std::string& b);

  sim::Scheduler&
  scheduler()
  {
    return m_scheduler;
  }

  /// The face of `node` that leads to `neighbor`.
  FaceId
  faceTowards(const std::string& node, const std::string& neighbor) const;

  /// Nexthop faces of the measured router for the producer prefix, in rank order.
  const std::vector<FaceId>&
  measuredFaces() const
  {
    return m_measuredFaces;
  }

  /// Null unless the strategy under test is a DQN-AF variant.
  dqn::DqnAfStrategy*
  dqnStrategy()
  {
    return m_dqn;
  }

private:
  std::unique_ptr<strategies::Strategy>
  makeStrategy(const std::string& name, const std::string& routerName,
               std::optional<neural::Mlp>& initialNet);

  void
  installEvent(const EventSpec& ev, size_t index);

private:
  const ScenarioConfig& m_cfg;
  uint32_t m_run;
  sim::Scheduler m_scheduler;
  std::map<std::string, std::unique_ptr<Node>> m_nodes;
  std::vector<std::unique_ptr<sim::Link>> m_links;
  std::vector<std::unique_ptr<LinkTransport>> m_transports;
  std::map<std::pair<std::string, std::string>, FaceId> m_faceTowards;

  Router* m_measured = nullptr;
  ConsumerApp* m_consumer = nullptr;
  ProducerApp* m_producer = nullptr;
  dqn::DqnAfStrategy* m_dqn = nullptr;
  std::vector<FaceId> m_measuredFaces;

  std::vector<uint64_t> m_interestsTx;
  std::vector<std::vector<uint64_t>> m_interestsTxPerFace;
  uint64_t m_probes = 0;
};

} // namespace dqnaf::harness

#endif // DQNAF_HARNESS_NETWORK_HPP
