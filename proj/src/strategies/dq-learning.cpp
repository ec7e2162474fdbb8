/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/strategies/dq-learning.hpp"

#include <algorithm>

namespace dqnaf::strategies {

double
DqLearningStrategy::q(FaceId face) const
{
  auto it = m_q.find(face);
  return it == m_q.end() ? m_config.initialQ : it->second;
}

void
DqLearningStrategy::learnFaces(const ndn::FibEntry& fibEntry)
{
  for (const auto& nh : fibEntry.getNextHops()) {
    if (std::find(m_faceOrder.begin(), m_faceOrder.end(), nh.face) == m_faceOrder.end()) {
      m_faceOrder.push_back(nh.face);
    }
  }
}

std::optional<FaceId>
DqLearningStrategy::argmin(const std::vector<FaceId>& faces) const
{
  std::optional<FaceId> best;
  for (FaceId face : faces) {
    if (!best || q(face) < q(*best)) {
      best = face;
    }
  }
  return best;
}

std::map<FaceId, double>
DqLearningStrategy::choiceDistribution(const ndn::FibEntry& fibEntry, Time now,
                                       std::optional<FaceId> inFace) const
{
  auto faces = eligibleFaces(fibEntry, inFace);
  std::map<FaceId, double> dist;
  if (faces.empty()) {
    return dist;
  }
  if (!suppressionActive(now)) {
    dist[*argmin(faces)] = 1.0;
    return dist;
  }
  double total = 0.0;
  for (FaceId face : faces) {
    double w = 1.0 / (q(face) + m_config.qFloorMs);
    dist[face] = w;
    total += w;
  }
  for (auto& [face, p] : dist) {
    p /= total;
  }
  return dist;
}

FaceId
DqLearningStrategy::choose(const ndn::FibEntry& fibEntry, Rng& rng, Time now,
                           std::optional<FaceId> inFace)
{
  learnFaces(fibEntry);
  auto faces = eligibleFaces(fibEntry, inFace);
  if (faces.empty()) {
    throw NoNexthop();
  }
  if (!suppressionActive(now)) {
    return *argmin(faces);
  }

  std::vector<double> weights;
  double total = 0.0;
  for (FaceId face : faces) {
    weights.push_back(1.0 / (q(face) + m_config.qFloorMs));
    total += weights.back();
  }
  double u = rng.uniform() * total;
  for (size_t i = 0; i < faces.size(); ++i) {
    if (u < weights[i]) {
      return faces[i];
    }
    u -= weights[i];
  }
  return faces.back();
}

void
DqLearningStrategy::onData(FaceId face, const std::optional<ndn::DqAnnotation>& annotation, Time now)
{
  if (!annotation) {
    throw MissingAnnotation();
  }
  double delay = toMilliseconds(now - annotation->sendTime);
  double target = delay + m_config.gamma * annotation->bestQ;
  m_q[face] = (1 - m_config.alpha) * q(face) + m_config.alpha * std::max(target, 0.0);
  m_consecutiveLosses[face] = 0;
  m_suppressedUntil.reset();
}

void
DqLearningStrategy::onLoss(FaceId face, Time now)
{
  if (suppressionActive(now)) {
    return;
  }
  bool wasPreferred = !m_faceOrder.empty() && argmin(m_faceOrder) == face;
  m_q[face] = (1 - m_config.alpha) * q(face) + m_config.alpha * m_config.lossPenaltyMs;
  uint64_t losses = ++m_consecutiveLosses[face];
  if (wasPreferred && losses >= m_config.suppressionLosses) {
    m_suppressedUntil = now + m_config.suppressionSpan;
    m_consecutiveLosses[face] = 0;
  }
}

double
DqLearningStrategy::bestQ(const ndn::FibEntry* fibEntry) const
{
  if (fibEntry == nullptr || fibEntry->getNextHops().empty()) {
    return 0.0;
  }
  double best = q(fibEntry->getNextHops().front().face);
  for (const auto& nh : fibEntry->getNextHops()) {
    best = std::min(best, q(nh.face));
  }
  return best;
}

std::vector<FaceId>
DqLearningStrategy::afterReceiveInterest(const ndn::Interest&, FaceId inFace,
                                         const ndn::FibEntry& fibEntry, const FaceStatsTable&,
                                         Time now)
{
  try {
    return {choose(fibEntry, m_rng, now, inFace)};
  }
  catch (const NoNexthop&) {
    return {};
  }
}

void
DqLearningStrategy::onDelivered(FaceId face, const InterestKey&, const ndn::Data& data,
                                const FaceStatsTable&, Time now)
{
  onData(face, data.dqAnnotation, now);
}

void
DqLearningStrategy::onLost(FaceId face, const InterestKey&, LossCause, const FaceStatsTable&, Time now)
{
  onLoss(face, now);
}

void
DqLearningStrategy::beforeSendData(ndn::Data& data, const ndn::FibEntry* fibEntry, Time now)
{
  data.dqAnnotation = ndn::DqAnnotation{bestQ(fibEntry), now};
}

} // namespace dqnaf::strategies
