/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_STRATEGIES_STRATEGY_HPP
#define DQNAF_STRATEGIES_STRATEGY_HPP

#include "dqnaf/measurements/face-stats.hpp"
#include "dqnaf/ndn/fib.hpp"
#include "dqnaf/ndn/packet.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqnaf::strategies {

using measurements::FaceStatsTable;
using measurements::LossCause;
using ndn::FaceId;

class NoNexthop : public std::runtime_error
{
public:
  NoNexthop()
    : std::runtime_error("no eligible nexthop")
  {
  }
};

/// Identity of one forwarded interest.
struct InterestKey
{
  ndn::Name name;
  uint64_t nonce = 0;

  friend auto operator<=>(const InterestKey&, const InterestKey&) = default;
};

/**
 * Forwarding strategy hooks, driven by the router pipeline.
 *
 * For every face returned by afterReceiveInterest the router sends the interest and
 * later reports exactly one of onDelivered, onLost, or onAbandoned for that face.
 * Measurements in the FaceStatsTable are updated before the strategy is notified.
 */
class Strategy
{
public:
  virtual
  ~Strategy() = default;

  virtual std::string
  name() const = 0;

  /// Out faces for a new PIT entry, a subset of the FIB nexthops; empty means NoRoute.
  virtual std::vector<FaceId>
  afterReceiveInterest(const ndn::Interest& interest, FaceId inFace, const ndn::FibEntry& fibEntry,
                       const FaceStatsTable& stats, Time now) = 0;

  virtual void
  onDelivered(FaceId face, const InterestKey& key, const ndn::Data& data,
              const FaceStatsTable& stats, Time now)
  {
  }

  virtual void
  onLost(FaceId face, const InterestKey& key, LossCause cause, const FaceStatsTable& stats, Time now)
  {
  }

  /// The out-record will never resolve, e.g. another branch already brought the Data.
  virtual void
  onAbandoned(FaceId face, const InterestKey& key)
  {
  }

  /// Period of onTimer, if the strategy wants one.
  virtual std::optional<Duration>
  timerInterval() const
  {
    return std::nullopt;
  }

  /// Faces on which the router should send a probe interest under fibEntry's prefix.
  virtual std::vector<FaceId>
  onTimer(const ndn::FibEntry& fibEntry, const FaceStatsTable& stats, Time now)
  {
    return {};
  }

  /// Chance to annotate Data before it leaves the router; a no-op for every strategy but one.
  virtual void
  beforeSendData(ndn::Data& data, const ndn::FibEntry* fibEntry, Time now)
  {
  }
};

/// Nexthops of the entry other than inFace, in FIB rank order.
std::vector<FaceId>
eligibleFaces(const ndn::FibEntry& fibEntry, std::optional<FaceId> inFace = std::nullopt);

} // namespace dqnaf::strategies

#endif // DQNAF_STRATEGIES_STRATEGY_HPP
