/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/strategies/strategy.hpp"

namespace dqnaf::strategies {

std::vector<FaceId>
eligibleFaces(const ndn::FibEntry& fibEntry, std::optional<FaceId> inFace)
{
  std::vector<FaceId> faces;
  for (const auto& nh : fibEntry.getNextHops()) {
    if (!inFace || nh.face != *inFace) {
      faces.push_back(nh.face);
    }
  }
  return faces;
}

} // namespace dqnaf::strategies
