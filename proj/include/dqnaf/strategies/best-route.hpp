/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_STRATEGIES_BEST_ROUTE_HPP
#define DQNAF_STRATEGIES_BEST_ROUTE_HPP

#include "dqnaf/strategies/strategy.hpp"

namespace dqnaf::strategies {

/// Lowest-cost nexthop (FIB order on ties). Never looks at measurements.
FaceId
bestRouteChoose(const ndn::FibEntry& fibEntry, std::optional<FaceId> inFace = std::nullopt);

class BestRouteStrategy : public Strategy
{
public:
  std::string
  name() const override
  {
    return "best-route";
  }

  std::vector<FaceId>
  afterReceiveInterest(const ndn::Interest& interest, FaceId inFace, const ndn::FibEntry& fibEntry,
                       const FaceStatsTable& stats, Time now) override;
};

} // namespace dqnaf::strategies

#endif // DQNAF_STRATEGIES_BEST_ROUTE_HPP
