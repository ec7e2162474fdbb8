/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_STRATEGIES_DQ_LEARNING_HPP
#define DQNAF_STRATEGIES_DQ_LEARNING_HPP

#include "dqnaf/common/rng.hpp"
#include "dqnaf/strategies/strategy.hpp"

#include <map>

namespace dqnaf::strategies {

class MissingAnnotation : public std::runtime_error
{
public:
  MissingAnnotation()
    : std::runtime_error("data packet carries no DQ annotation")
  {
  }
};

struct DqConfig
{
  double alpha = 0.3;
  double gamma = 0.9;
  double lossPenaltyMs = 1000.0;
  double qFloorMs = 1.0;
  uint64_t suppressionLosses = 2;
  Duration suppressionSpan = milliseconds(500);
  double initialQ = 0.0;
};

/**
 * Data-based Q-routing: q[face] estimates the delivery delay (ms) through the face.
 *
 * Each hop stamps Data with its best q and the send time; the receiving hop
 * updates q[face] <- (1-alpha) q + alpha (delay + gamma * bestQ). A loss pulls
 * q towards lossPenaltyMs. Repeated losses on the preferred face switch
 * selection to delay-weighted random sampling for a while, with q frozen
 * against further losses.
 */
class DqLearningStrategy : public Strategy
{
public:
  DqLearningStrategy(DqConfig config, Rng rng)
    : m_config(config)
    , m_rng(std::move(rng))
  {
  }

  std::string
  name() const override
  {
    return "dq-learning";
  }

  /// Throws NoNexthop.
  FaceId
  choose(const ndn::FibEntry& fibEntry, Rng& rng, Time now, std::optional<FaceId> inFace = std::nullopt);

  /// Throws MissingAnnotation when annotation is empty.
  void
  onData(FaceId face, const std::optional<ndn::DqAnnotation>& annotation, Time now);

  void
  onLoss(FaceId face, Time now);

  double
  q(FaceId face) const;

  void
  setQ(FaceId face, double value)
  {
    m_q[face] = value;
  }

  bool
  suppressionActive(Time now) const
  {
    return m_suppressedUntil && now < *m_suppressedUntil;
  }

  /// Probability that choose() picks each eligible face at `now`.
  std::map<FaceId, double>
  choiceDistribution(const ndn::FibEntry& fibEntry, Time now,
                     std::optional<FaceId> inFace = std::nullopt) const;

  /// Lowest q among the entry's nexthops; 0 for an entry the node serves itself.
  double
  bestQ(const ndn::FibEntry* fibEntry) const;

  std::vector<FaceId>
  afterReceiveInterest(const ndn::Interest& interest, FaceId inFace, const ndn::FibEntry& fibEntry,
                       const FaceStatsTable& stats, Time now) override;

  void
  onDelivered(FaceId face, const InterestKey& key, const ndn::Data& data,
              const FaceStatsTable& stats, Time now) override;

  void
  onLost(FaceId face, const InterestKey& key, LossCause cause, const FaceStatsTable& stats,
         Time now) override;

  void
  beforeSendData(ndn::Data& data, const ndn::FibEntry* fibEntry, Time now) override;

private:
  void
  learnFaces(const ndn::FibEntry& fibEntry);

  std::optional<FaceId>
  argmin(const std::vector<FaceId>& faces) const;

private:
  DqConfig m_config;
  Rng m_rng;
  std::map<FaceId, double> m_q;
  std::vector<FaceId> m_faceOrder; // FIB rank order, for tie-breaks
  std::map<FaceId, uint64_t> m_consecutiveLosses;
  std::optional<Time> m_suppressedUntil;
};

} // namespace dqnaf::strategies

#endif // DQNAF_STRATEGIES_DQ_LEARNING_HPP
