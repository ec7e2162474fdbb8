/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_HARNESS_NODE_HPP
#define DQNAF_HARNESS_NODE_HPP

#include "dqnaf/common/rng.hpp"
#include "dqnaf/ndn/cs.hpp"
#include "dqnaf/ndn/face.hpp"
#include "dqnaf/ndn/fib.hpp"
#include "dqnaf/ndn/pit.hpp"
#include "dqnaf/measurements/face-stats.hpp"
#include "dqnaf/sim/link.hpp"
#include "dqnaf/sim/scheduler.hpp"
#include "dqnaf/strategies/strategy.hpp"

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace dqnaf::harness {

using ndn::FaceId;
using ndn::NodeId;

class Node
{
public:
  Node(NodeId id, std::string name, sim::Scheduler& scheduler)
    : m_id(id)
    , m_name(std::move(name))
    , m_scheduler(scheduler)
  {
  }

  virtual
  ~Node() = default;

  FaceId
  addFace(ndn::FaceTransport* transport);

  virtual void
  receive(FaceId face, ndn::Packet packet) = 0;

  NodeId
  id() const
  {
    return m_id;
  }

  const std::string&
  name() const
  {
    return m_name;
  }

  const std::map<FaceId, ndn::Face>&
  faces() const
  {
    return m_faces;
  }

protected:
  void
  send(FaceId face, ndn::Packet packet);

  Time
  now() const
  {
    return m_scheduler.now();
  }

protected:
  NodeId m_id;
  std::string m_name;
  sim::Scheduler& m_scheduler;
  std::map<FaceId, ndn::Face> m_faces;
};

/// One direction of a link, seen as a face transport; arrivals are scheduled on the far node.
class LinkTransport : public ndn::FaceTransport
{
public:
  LinkTransport(sim::Link& link, sim::Direction dir, sim::Scheduler& scheduler)
    : m_link(link)
    , m_dir(dir)
    , m_scheduler(scheduler)
  {
  }

  void
  connect(Node& remote, FaceId remoteFace)
  {
    m_remote = &remote;
    m_remoteFace = remoteFace;
  }

  void
  send(ndn::Packet packet, Time now) override;

private:
  sim::Link& m_link;
  sim::Direction m_dir;
  sim::Scheduler& m_scheduler;
  Node* m_remote = nullptr;
  FaceId m_remoteFace = 0;
};

struct RouterCounters
{
  uint64_t interestsReceived = 0;
  uint64_t interestsSent = 0;
  uint64_t probesSent = 0;
  uint64_t duplicateNonces = 0;
  uint64_t aggregated = 0;
  uint64_t unsolicitedData = 0;
  uint64_t nacksSent = 0;
  uint64_t nacksReceived = 0;
  uint64_t timeouts = 0;
  uint64_t delivered = 0;
  uint64_t abandoned = 0;
};

/**
 * NDN forwarder: CS -> PIT -> FIB -> strategy for interests, PIT -> downstream for
 * Data, plus a per-out-record loss timer of the face's RTO.
 *
 * Every out-record gets exactly one verdict: delivered (its Data came back), lost
 * (timer, NACK, or PIT expiry first), or abandoned (another upstream won).
 */
class Router : public Node
{
public:
  using SendObserver = std::function<void(FaceId face, Time when, bool isProbe)>;

  Router(NodeId id, std::string name, sim::Scheduler& scheduler,
         measurements::MeasurementConfig measurement, size_t csCapacity);

  void
  setStrategy(std::unique_ptr<strategies::Strategy> strategy);

  void
  setSendObserver(SendObserver observer)
  {
    m_sendObserver = std::move(observer);
  }

  /// Arms the strategy's periodic timer, if any; the first tick is one interval after `start`.
  void
  start(Time start, Time end, ndn::Name probePrefix);

  void
  receive(FaceId face, ndn::Packet packet) override;

  ndn::Fib&
  fib()
  {
    return m_fib;
  }

  ndn::Pit&
  pit()
  {
    return m_pit;
  }

  ndn::Cs&
  cs()
  {
    return m_cs;
  }

  measurements::FaceStatsTable&
  stats()
  {
    return m_stats;
  }

  strategies::Strategy&
  strategy()
  {
    return *m_strategy;
  }

  const RouterCounters&
  counters() const
  {
    return m_counters;
  }

private:
  void
  onIncomingInterest(FaceId inFace, ndn::Interest interest);

  void
  onIncomingData(FaceId inFace, ndn::Data data);

  void
  onIncomingNack(FaceId inFace, const ndn::Nack& nack);

  void
  forwardInterest(ndn::PitEntry& entry, const ndn::Interest& interest, FaceId outFace, bool isProbe);

  void
  onLossTimer(const ndn::Name& name, FaceId face, uint64_t nonce, Time sendTime);

  void
  onPitExpiry();

  void
  sendNack(FaceId face, const ndn::Name& name, uint64_t nonce, ndn::NackReason reason);

  void
  onProbeTimer(Time end);

private:
  ndn::Pit m_pit;
  ndn::Fib m_fib;
  ndn::Cs m_cs;
  measurements::FaceStatsTable m_stats;
  std::unique_ptr<strategies::Strategy> m_strategy;
  SendObserver m_sendObserver;
  RouterCounters m_counters;
  ndn::Name m_probePrefix;
  uint64_t m_probeSeq = 0;
  std::set<ndn::Name> m_probeNames;
};

class ConsumerApp : public Node
{
public:
  struct Params
  {
    ndn::Name prefix;
    double rate = 100.0;
    Time start{0};
    Time stop{0};
    Duration lifetime = milliseconds(2000);
  };

  ConsumerApp(NodeId id, std::string name, sim::Scheduler& scheduler, Params params, Rng nonceRng,
              size_t bins);

  /// Schedules sends at start + k/rate for every such time strictly before stop.
  void
  start();

  void
  receive(FaceId face, ndn::Packet packet) override;

  const std::vector<uint64_t>&
  dataPerSecond() const
  {
    return m_dataPerSecond;
  }

  uint64_t
  interestsSent() const
  {
    return m_sent;
  }

  uint64_t
  dataReceived() const
  {
    return m_received;
  }

  uint64_t
  nacksReceived() const
  {
    return m_nacks;
  }

  const std::vector<ndn::Data>&
  receivedLog() const
  {
    return m_log;
  }

  void
  keepLog(bool keep)
  {
    m_keepLog = keep;
  }

private:
  void
  sendNext(uint64_t seq);

private:
  Params m_params;
  Rng m_nonceRng;
  std::vector<uint64_t> m_dataPerSecond;
  std::set<ndn::Name> m_outstanding;
  uint64_t m_sent = 0;
  uint64_t m_received = 0;
  uint64_t m_nacks = 0;
  bool m_keepLog = false;
  std::vector<ndn::Data> m_log;
};

class ProducerApp : public Node
{
public:
  ProducerApp(NodeId id, std::string name, sim::Scheduler& scheduler, ndn::Name prefix,
              uint32_t payloadBytes, bool annotateDq)
    : Node(id, std::move(name), scheduler)
    , m_prefix(std::move(prefix))
    , m_payloadBytes(payloadBytes)
    , m_annotateDq(annotateDq)
  {
  }

  void
  receive(FaceId face, ndn::Packet packet) override;

  uint64_t
  dataSent() const
  {
    return m_sent;
  }

  const std::vector<ndn::Data>&
  sentLog() const
  {
    return m_log;
  }

  void
  keepLog(bool keep)
  {
    m_keepLog = keep;
  }

private:
  ndn::Name m_prefix;
  uint32_t m_payloadBytes;
  bool m_annotateDq;
  uint64_t m_sent = 0;
  bool m_keepLog = false;
  std::vector<ndn::Data> m_log;
};

} // namespace dqnaf::harness

#endif // DQNAF_HARNESS_NODE_HPP
