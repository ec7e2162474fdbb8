/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_STRATEGIES_MULTICAST_HPP
#define DQNAF_STRATEGIES_MULTICAST_HPP

#include "dqnaf/strategies/strategy.hpp"

namespace dqnaf::strategies {

/// Every nexthop except the incoming face.
std::vector<FaceId>
multicastChoose(const ndn::FibEntry& fibEntry, FaceId inFace);

class MulticastStrategy : public Strategy
{
public:
  std::string
  name() const override
  {
    return "multicast";
  }

  std::vector<FaceId>
  afterReceiveInterest(const ndn::Interest& interest, FaceId inFace, const ndn::FibEntry& fibEntry,
                       const FaceStatsTable& stats, Time now) override;
};

} // namespace dqnaf::strategies

#endif // DQNAF_STRATEGIES_MULTICAST_HPP
