/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_DQN_DQN_AF_STRATEGY_HPP
#define DQNAF_DQN_DQN_AF_STRATEGY_HPP

#include "dqnaf/dqn/agent.hpp"
#include "dqnaf/strategies/strategy.hpp"

#include <map>

namespace dqnaf::dqn {

using strategies::FaceId;
using strategies::InterestKey;

/**
 * DQN-based adaptive forwarding.
 *
 * The state is the (omega, delta) pair of every face in a fixed order (the FIB rank
 * order when the router was built); output i of the network is the predicted cost
 * of face i. The router reports each forwarded interest's fate, which becomes the
 * reward: srtt/omega of the face on delivery, the loss reward otherwise.
 */
class DqnAfStrategy : public strategies::Strategy
{
public:
  DqnAfStrategy(std::string label, AgentConfig cfg, std::vector<FaceId> faceOrder,
                neural::Mlp initialNet, Rng exploreRng, Rng replayRng);

  std::string
  name() const override
  {
    return m_label;
  }

  std::vector<FaceId>
  afterReceiveInterest(const ndn::Interest& interest, FaceId inFace, const ndn::FibEntry& fibEntry,
                       const strategies::FaceStatsTable& stats, Time now) override;

  void
  onDelivered(FaceId face, const InterestKey& key, const ndn::Data& data,
              const strategies::FaceStatsTable& stats, Time now) override;

  void
  onLost(FaceId face, const InterestKey& key, strategies::LossCause cause,
         const strategies::FaceStatsTable& stats, Time now) override;

  void
  onAbandoned(FaceId face, const InterestKey& key) override;

  const DqnAgent&
  agent() const
  {
    return m_agent;
  }

  const std::vector<FaceId>&
  faceOrder() const
  {
    return m_faceOrder;
  }

  size_t
  pendingCount() const
  {
    return m_pending.size();
  }

  uint64_t
  createdCount() const
  {
    return m_created;
  }

  uint64_t
  abandonedCount() const
  {
    return m_abandoned;
  }

private:
  void
  resolve(const InterestKey& key, FaceId face, double reward);

private:
  std::string m_label;
  DqnAgent m_agent;
  std::vector<FaceId> m_faceOrder;
  std::map<InterestKey, PendingAction> m_pending;
  uint64_t m_created = 0;
  uint64_t m_abandoned = 0;
};

} // namespace dqnaf::dqn

#endif // DQNAF_DQN_DQN_AF_STRATEGY_HPP
