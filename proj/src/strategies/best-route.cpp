/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/strategies/best-route.hpp"

namespace dqnaf::strategies {

FaceId
bestRouteChoose(const ndn::FibEntry& fibEntry, std::optional<FaceId> inFace)
{
  // nexthops are already cost-sorted with stable ties
  for (const auto& nh : fibEntry.getNextHops()) {
    if (!inFace || nh.face != *inFace) {
      return nh.face;
    }
  }
  throw NoNexthop();
}

std::vector<FaceId>
BestRouteStrategy::afterReceiveInterest(const ndn::Interest&, FaceId inFace,
                                        const ndn::FibEntry& fibEntry, const FaceStatsTable&, Time)
{
  try {
    return {bestRouteChoose(fibEntry, inFace)};
  }
  catch (const NoNexthop&) {
    return {};
  }
}

} // namespace dqnaf::strategies
