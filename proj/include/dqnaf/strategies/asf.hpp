/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_STRATEGIES_ASF_HPP
#define DQNAF_STRATEGIES_ASF_HPP

#include "dqnaf/strategies/strategy.hpp"

#include <set>

namespace dqnaf::strategies {

struct AsfConfig
{
  Duration probeInterval = seconds(1);
};

/**
 * Adaptive SRTT-based forwarding.
 *
 * Ranking: measured, non-penalized faces by ascending srtt (FIB rank on ties), then
 * unmeasured non-penalized faces in FIB order, then penalized faces in FIB order.
 * A timeout penalizes a face; any Data received on it (a probe reply included)
 * lifts the penalty.
 */
class AsfStrategy : public Strategy
{
public:
  explicit
  AsfStrategy(AsfConfig config = {})
    : m_config(config)
  {
  }

  std::string
  name() const override
  {
    return "asf";
  }

  std::vector<FaceId>
  ranking(const ndn::FibEntry& fibEntry, const FaceStatsTable& stats,
          std::optional<FaceId> inFace = std::nullopt) const;

  /// Best-ranked face; throws NoNexthop.
  FaceId
  choose(const ndn::FibEntry& fibEntry, const FaceStatsTable& stats,
         std::optional<FaceId> inFace = std::nullopt) const;

  bool
  isPenalized(FaceId face) const
  {
    return m_penalized.contains(face);
  }

  void
  penalize(FaceId face)
  {
    m_penalized.insert(face);
  }

  std::vector<FaceId>
  afterReceiveInterest(const ndn::Interest& interest, FaceId inFace, const ndn::FibEntry& fibEntry,
                       const FaceStatsTable& stats, Time now) override;

  void
  onDelivered(FaceId face, const InterestKey& key, const ndn::Data& data,
              const FaceStatsTable& stats, Time now) override;

  void
  onLost(FaceId face, const InterestKey& key, LossCause cause, const FaceStatsTable& stats,
         Time now) override;

  std::optional<Duration>
  timerInterval() const override
  {
    return m_config.probeInterval;
  }

  /// Probes every face except the current best one.
  std::vector<FaceId>
  onTimer(const ndn::FibEntry& fibEntry, const FaceStatsTable& stats, Time now) override;

  uint64_t
  probeRounds() const
  {
    return m_probeRounds;
  }

private:
  AsfConfig m_config;
  std::set<FaceId> m_penalized;
  uint64_t m_probeRounds = 0;
};

} // namespace dqnaf::strategies

#endif // DQNAF_STRATEGIES_ASF_HPP
