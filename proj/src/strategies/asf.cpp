/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/strategies/asf.hpp"

#include <algorithm>

namespace dqnaf::strategies {

std::vector<FaceId>
AsfStrategy::ranking(const ndn::FibEntry& fibEntry, const FaceStatsTable& stats,
                     std::optional<FaceId> inFace) const
{
  struct Candidate
  {
    int tier; // 0 measured, 1 unmeasured, 2 penalized
    Duration srtt;
    int rank;
    FaceId face;
  };

  std::vector<Candidate> candidates;
  int rank = 0;
  for (FaceId face : eligibleFaces(fibEntry, inFace)) {
    const auto* fs = stats.find(face);
    auto srtt = fs != nullptr ? fs->srtt() : std::nullopt;
    int tier = isPenalized(face) ? 2 : (srtt ? 0 : 1);
    candidates.push_back({tier, tier == 0 ? *srtt : Duration::zero(), rank++, face});
  }
  std::sort(candidates.begin(), candidates.end(), [] (const Candidate& a, const Candidate& b) {
    return std::tie(a.tier, a.srtt, a.rank) < std::tie(b.tier, b.srtt, b.rank);
  });

  std::vector<FaceId> faces;
  for (const auto& c : candidates) {
    faces.push_back(c.face);
  }
  return faces;
}

FaceId
AsfStrategy::choose(const ndn::FibEntry& fibEntry, const FaceStatsTable& stats,
                    std::optional<FaceId> inFace) const
{
  auto faces = ranking(fibEntry, stats, inFace);
  if (faces.empty()) {
    throw NoNexthop();
  }
  return faces.front();
}

std::vector<FaceId>
AsfStrategy::afterReceiveInterest(const ndn::Interest&, FaceId inFace, const ndn::FibEntry& fibEntry,
                                  const FaceStatsTable& stats, Time)
{
  auto faces = ranking(fibEntry, stats, inFace);
  if (faces.empty()) {
    return {};
  }
  return {faces.front()};
}

void
AsfStrategy::onDelivered(FaceId face, const InterestKey&, const ndn::Data&, const FaceStatsTable&, Time)
{
  m_penalized.erase(face);
}

void
AsfStrategy::onLost(FaceId face, const InterestKey&, LossCause cause, const FaceStatsTable&, Time)
{
  if (cause == LossCause::TIMEOUT) {
    m_penalized.insert(face);
  }
}

std::vector<FaceId>
AsfStrategy::onTimer(const ndn::FibEntry& fibEntry, const FaceStatsTable& stats, Time)
{
  auto faces = ranking(fibEntry, stats);
  if (faces.size() < 2) {
    return {};
  }
  ++m_probeRounds;
  return {faces.begin() + 1, faces.end()};
}

} // namespace dqnaf::strategies
