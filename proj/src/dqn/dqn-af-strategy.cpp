/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/dqn/dqn-af-strategy.hpp"

#include <algorithm>

namespace dqnaf::dqn {

DqnAfStrategy::DqnAfStrategy(std::string label, AgentConfig cfg, std::vector<FaceId> faceOrder,
                             neural::Mlp initialNet, Rng exploreRng, Rng replayRng)
  : m_label(std::move(label))
  , m_agent(cfg, std::move(initialNet), std::move(exploreRng), std::move(replayRng))
  , m_faceOrder(std::move(faceOrder))
{
  if (m_faceOrder.size() != m_agent.network().faceCount()) {
    throw neural::ShapeMismatch("face order does not match network output size");
  }
}

std::vector<FaceId>
DqnAfStrategy::afterReceiveInterest(const ndn::Interest& interest, FaceId inFace,
                                    const ndn::FibEntry& fibEntry,
                                    const strategies::FaceStatsTable& stats, Time now)
{
  std::vector<size_t> eligible;
  for (size_t i = 0; i < m_faceOrder.size(); ++i) {
    if (m_faceOrder[i] != inFace && fibEntry.hasNextHop(m_faceOrder[i])) {
      eligible.push_back(i);
    }
  }
  if (eligible.empty()) {
    return {};
  }

  auto state = stats.stateVector(m_faceOrder);
  PendingAction pending = m_agent.act(state, eligible, now);
  FaceId face = m_faceOrder[pending.action];
  m_pending.insert_or_assign(InterestKey{interest.name, interest.nonce}, std::move(pending));
  ++m_created;
  return {face};
}

void
DqnAfStrategy::resolve(const InterestKey& key, FaceId face, double reward)
{
  auto it = m_pending.find(key);
  if (it == m_pending.end() || m_faceOrder[it->second.action] != face) {
    return; // probe or foreign out-record
  }
  m_agent.resolve(it->second, reward);
  m_pending.erase(it);
}

void
DqnAfStrategy::onDelivered(FaceId face, const InterestKey& key, const ndn::Data&,
                           const strategies::FaceStatsTable& stats, Time)
{
  const auto* fs = stats.find(face);
  if (fs == nullptr || !fs->srtt()) {
    return;
  }
  resolve(key, face, computeReward(true, *fs->srtt(), fs->omega(), m_agent.config()));
}

void
DqnAfStrategy::onLost(FaceId face, const InterestKey& key, strategies::LossCause,
                      const strategies::FaceStatsTable&, Time)
{
  resolve(key, face, computeReward(false, Duration::zero(), 0.0, m_agent.config()));
}

void
DqnAfStrategy::onAbandoned(FaceId face, const InterestKey& key)
{
  auto it = m_pending.find(key);
  if (it != m_pending.end() && m_faceOrder[it->second.action] == face) {
    m_pending.erase(it);
    ++m_abandoned;
  }
}

} // namespace dqnaf::dqn
