/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/strategies/multicast.hpp"

namespace dqnaf::strategies {

std::vector<FaceId>
multicastChoose(const ndn::FibEntry& fibEntry, FaceId inFace)
{
  auto faces = eligibleFaces(fibEntry, inFace);
  if (faces.empty()) {
    throw NoNexthop();
  }
  return faces;
}

std::vector<FaceId>
MulticastStrategy::afterReceiveInterest(const ndn::Interest&, FaceId inFace,
                                        const ndn::FibEntry& fibEntry, const FaceStatsTable&, Time)
{
  return eligibleFaces(fibEntry, inFace);
}

} // namespace dqnaf::strategies
