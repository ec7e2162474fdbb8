/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/harness/node.hpp"

#include <algorithm>
#include <cmath>

namespace dqnaf::harness {

using ndn::INTERNAL_FACE;
using strategies::InterestKey;
using measurements::LossCause;

FaceId
Node::addFace(ndn::FaceTransport* transport)
{
  auto id = static_cast<FaceId>(m_faces.size() + 1);
  m_faces.emplace(id, ndn::Face{id, transport, true});
  return id;
}

void
Node::send(FaceId face, ndn::Packet packet)
{
  const auto& f = m_faces.at(face);
  if (f.up && f.transport != nullptr) {
    f.transport->send(std::move(packet), now());
  }
}

void
LinkTransport::send(ndn::Packet packet, Time now)
{
  auto result = m_link.transmit(m_dir, ndn::wireSizeBits(packet), now);
  if (result.outcome != sim::TransmitOutcome::ARRIVE || m_remote == nullptr) {
    return;
  }
  m_scheduler.schedule(result.arrival, [remote = m_remote, face = m_remoteFace,
                                        p = std::move(packet)] () mutable {
    remote->receive(face, std::move(p));
  });
}

// ---------------------------------------------------------------------------------------

Router::Router(NodeId id, std::string name, sim::Scheduler& scheduler,
               measurements::MeasurementConfig measurement, size_t csCapacity)
  : Node(id, std::move(name), scheduler)
  , m_cs(csCapacity)
  , m_stats(measurement)
{
}

void
Router::setStrategy(std::unique_ptr<strategies::Strategy> strategy)
{
  m_strategy = std::move(strategy);
}

void
Router::start(Time start, Time end, ndn::Name probePrefix)
{
  m_probePrefix = std::move(probePrefix);
  auto interval = m_strategy->timerInterval();
  if (!interval) {
    return;
  }
  Time first = start + *interval;
  if (first < end) {
    m_scheduler.schedule(first, [this, end] { onProbeTimer(end); });
  }
}

void
Router::receive(FaceId face, ndn::Packet packet)
{
  if (auto* interest = std::get_if<ndn::Interest>(&packet)) {
    onIncomingInterest(face, std::move(*interest));
  }
  else if (auto* data = std::get_if<ndn::Data>(&packet)) {
    onIncomingData(face, std::move(*data));
  }
  else {
    onIncomingNack(face, std::get<ndn::Nack>(packet));
  }
}

void
Router::onIncomingInterest(FaceId inFace, ndn::Interest interest)
{
  ++m_counters.interestsReceived;

  if (auto hit = m_cs.lookup(interest.name)) {
    send(inFace, *hit);
    return;
  }

  auto result = m_pit.insertOrAggregate(interest, inFace, now());
  switch (result.outcome) {
    case ndn::InsertOutcome::DUPLICATE_NONCE:
      ++m_counters.duplicateNonces;
      return;
    case ndn::InsertOutcome::AGGREGATED:
      ++m_counters.aggregated;
      m_scheduler.schedule(result.entry->expiry, [this] { onPitExpiry(); });
      return;
    case ndn::InsertOutcome::NEW_ENTRY:
      m_scheduler.schedule(result.entry->expiry, [this] { onPitExpiry(); });
      break;
  }

  const ndn::FibEntry* fibEntry = m_fib.findLongestPrefixMatch(interest.name);
  std::vector<FaceId> outFaces;
  if (fibEntry != nullptr) {
    outFaces = m_strategy->afterReceiveInterest(interest, inFace, *fibEntry, m_stats, now());
  }
  if (outFaces.empty()) {
    sendNack(inFace, interest.name, interest.nonce, ndn::NackReason::NO_ROUTE);
    m_pit.eraseNacked(interest.name);
    return;
  }
  for (FaceId face : outFaces) {
    forwardInterest(*result.entry, interest, face, false);
  }
}

void
Router::forwardInterest(ndn::PitEntry& entry, const ndn::Interest& interest, FaceId outFace,
                        bool isProbe)
{
  Time t = now();
  entry.outRecords[outFace] = ndn::OutRecord{t, interest.nonce, false};
  auto& fs = m_stats.get(outFace);
  fs.recordSent(t);

  ++m_counters.interestsSent;
  if (isProbe) {
    ++m_counters.probesSent;
  }
  if (m_sendObserver) {
    m_sendObserver(outFace, t, isProbe);
  }

  m_scheduler.schedule(t + fs.lossTimeout(),
                       [this, name = interest.name, outFace, nonce = interest.nonce, t] {
                         onLossTimer(name, outFace, nonce, t);
                       });

  ndn::Interest out = interest;
  out.hopTrace.push_back(m_id);
  send(outFace, std::move(out));
}

void
Router::onLossTimer(const ndn::Name& name, FaceId face, uint64_t nonce, Time sendTime)
{
  ndn::PitEntry* entry = m_pit.find(name);
  if (entry == nullptr) {
    return;
  }
  auto it = entry->outRecords.find(face);
  if (it == entry->outRecords.end() || it->second.resolved || it->second.nonce != nonce ||
      it->second.sendTime != sendTime) {
    return;
  }
  it->second.resolved = true;
  ++m_counters.timeouts;
  m_stats.get(face).recordLost(LossCause::TIMEOUT, now());
  m_strategy->onLost(face, InterestKey{name, nonce}, LossCause::TIMEOUT, m_stats, now());
}

void
Router::onIncomingData(FaceId inFace, ndn::Data data)
{
  auto result = m_pit.satisfy(data, inFace, now());
  if (!result.matched) {
    ++m_counters.unsolicitedData;
    return;
  }

  for (const auto& [face, record] : result.outRecords) {
    if (record.resolved) {
      continue;
    }
    InterestKey key{data.name, record.nonce};
    if (face == inFace) {
      ++m_counters.delivered;
      m_stats.get(face).recordDelivered(*result.rtt, now());
      m_strategy->onDelivered(face, key, data, m_stats, now());
    }
    else {
      ++m_counters.abandoned;
      m_stats.get(face).recordAbandoned();
      m_strategy->onAbandoned(face, key);
    }
  }

  m_cs.insert(data);
  const ndn::FibEntry* fibEntry = m_fib.findLongestPrefixMatch(data.name);
  for (FaceId down : result.downFaces) {
    if (down == INTERNAL_FACE) {
      m_probeNames.erase(data.name);
      continue;
    }
    ndn::Data out = data;
    m_strategy->beforeSendData(out, fibEntry, now());
    send(down, std::move(out));
  }
}

void
Router::onIncomingNack(FaceId inFace, const ndn::Nack& nack)
{
  ++m_counters.nacksReceived;
  ndn::PitEntry* entry = m_pit.find(nack.name);
  if (entry == nullptr) {
    return;
  }
  auto it = entry->outRecords.find(inFace);
  if (it == entry->outRecords.end() || it->second.resolved || it->second.nonce != nack.nonce) {
    return;
  }
  it->second.resolved = true;
  m_stats.get(inFace).recordLost(LossCause::NACK, now());
  m_strategy->onLost(inFace, InterestKey{nack.name, nack.nonce}, LossCause::NACK, m_stats, now());

  bool exhausted = std::all_of(entry->outRecords.begin(), entry->outRecords.end(),
                               [] (const auto& kv) { return kv.second.resolved; });
  if (!exhausted) {
    return;
  }
  for (FaceId down : entry->inFaces) {
    if (down != INTERNAL_FACE) {
      sendNack(down, nack.name, nack.nonce, nack.reason);
    }
  }
  m_probeNames.erase(nack.name);
  m_pit.eraseNacked(nack.name);
}

void
Router::onPitExpiry()
{
  for (auto& record : m_pit.expire(now())) {
    m_probeNames.erase(record.name);
    for (auto& [face, out] : record.outRecords) {
      if (out.resolved) {
        continue;
      }
      ++m_counters.timeouts;
      m_stats.get(face).recordLost(LossCause::TIMEOUT, now());
      m_strategy->onLost(face, InterestKey{record.name, out.nonce}, LossCause::TIMEOUT, m_stats, now());
    }
  }
}

void
Router::sendNack(FaceId face, const ndn::Name& name, uint64_t nonce, ndn::NackReason reason)
{
  if (face == INTERNAL_FACE) {
    return;
  }
  ++m_counters.nacksSent;
  send(face, ndn::Nack{name, nonce, reason});
}

void
Router::onProbeTimer(Time end)
{
  const ndn::FibEntry* fibEntry = m_fib.findLongestPrefixMatch(m_probePrefix);
  if (fibEntry != nullptr) {
    for (FaceId face : m_strategy->onTimer(*fibEntry, m_stats, now())) {
      ndn::Interest probe;
      probe.name = m_probePrefix;
      probe.name.append("probe").appendNumber(m_id).appendNumber(m_probeSeq);
      probe.nonce = mixSeed((static_cast<uint64_t>(m_id) << 40) ^ m_probeSeq);
      probe.lifetime = m_stats.config().rtoMax;
      ++m_probeSeq;

      auto result = m_pit.insertOrAggregate(probe, INTERNAL_FACE, now());
      if (result.outcome != ndn::InsertOutcome::NEW_ENTRY) {
        continue;
      }
      m_probeNames.insert(probe.name);
      m_scheduler.schedule(result.entry->expiry, [this] { onPitExpiry(); });
      forwardInterest(*result.entry, probe, face, true);
    }
  }

  Time next = now() + *m_strategy->timerInterval();
  if (next < end) {
    m_scheduler.schedule(next, [this, end] { onProbeTimer(end); });
  }
}

// ---------------------------------------------------------------------------------------

ConsumerApp::ConsumerApp(NodeId id, std::string name, sim::Scheduler& scheduler, Params params,
                         Rng nonceRng, size_t bins)
  : Node(id, std::move(name), scheduler)
  , m_params(std::move(params))
  , m_nonceRng(std::move(nonceRng))
  , m_dataPerSecond(bins, 0)
{
}

void
ConsumerApp::start()
{
  if (m_params.start < m_params.stop) {
    m_scheduler.schedule(m_params.start, [this] { sendNext(0); });
  }
}

void
ConsumerApp::sendNext(uint64_t seq)
{
  ndn::Interest interest;
  interest.name = m_params.prefix;
  interest.name.appendNumber(seq);
  interest.nonce = m_nonceRng.nextBits();
  interest.lifetime = m_params.lifetime;
  m_outstanding.insert(interest.name);
  ++m_sent;
  send(1, std::move(interest));

  // absolute times avoid drift: start + (seq + 1) / rate
  auto offset = Duration(std::llround(static_cast<double>(seq + 1) * 1e9 / m_params.rate));
  Time next = m_params.start + offset;
  if (next < m_params.stop) {
    m_scheduler.schedule(next, [this, seq] { sendNext(seq + 1); });
  }
}

void
ConsumerApp::receive(FaceId, ndn::Packet packet)
{
  if (std::holds_alternative<ndn::Nack>(packet)) {
    ++m_nacks;
    return;
  }
  auto* data = std::get_if<ndn::Data>(&packet);
  if (data == nullptr || m_outstanding.erase(data->name) == 0) {
    return;
  }
  ++m_received;
  auto bin = static_cast<size_t>(now().count() / 1'000'000'000);
  if (bin < m_dataPerSecond.size()) {
    ++m_dataPerSecond[bin];
  }
  if (m_keepLog) {
    m_log.push_back(*data);
  }
}

void
ProducerApp::receive(FaceId face, ndn::Packet packet)
{
  auto* interest = std::get_if<ndn::Interest>(&packet);
  if (interest == nullptr) {
    return;
  }
  if (!m_prefix.isPrefixOf(interest->name)) {
    send(face, ndn::Nack{interest->name, interest->nonce, ndn::NackReason::NO_ROUTE});
    return;
  }
  ndn::Data data;
  data.name = interest->name;
  data.payloadSize = m_payloadBytes;
  if (m_annotateDq) {
    data.dqAnnotation = ndn::DqAnnotation{0.0, now()};
  }
  ++m_sent;
  if (m_keepLog) {
    m_log.push_back(data);
  }
  send(face, std::move(data));
}

} // namespace dqnaf::harness
