/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_SIM_LOSS_MODEL_HPP
#define DQNAF_SIM_LOSS_MODEL_HPP

#include "dqnaf/common/rng.hpp"

#include <cstdint>
#include <stdexcept>

namespace dqnaf::sim {

/**
 * Burst error process in the style of ns3::BurstErrorModel.
 *
 * Outside a burst, each packet starts a new burst with probability `rate`. The burst
 * length is an exponential sample with mean `meanBurst`, rounded half-up and clamped
 * to at least one packet; the starting packet counts as the first loss.
 */
class BurstLossModel
{
public:
  BurstLossModel(double rate, double meanBurst)
    : m_rate(rate)
    , m_meanBurst(meanBurst)
  {
    if (!(rate >= 0.0 && rate <= 1.0)) {
      throw std::invalid_argument("burst rate must lie in [0, 1]");
    }
    if (!(meanBurst >= 1.0)) {
      throw std::invalid_argument("mean burst length must be >= 1");
    }
  }

  bool
  shouldDrop(Rng& rng);

  double
  rate() const
  {
    return m_rate;
  }

  double
  meanBurst() const
  {
    return m_meanBurst;
  }

  int64_t
  remainingBurst() const
  {
    return m_remaining;
  }

  void
  setRemainingBurst(int64_t n)
  {
    m_remaining = n < 0 ? 0 : n;
  }

  /// Closed-form long-run drop fraction rate*mean / (1 + rate*mean).
  static double
  approximateDropFraction(double rate, double meanBurst)
  {
    return rate * meanBurst / (1.0 + rate * meanBurst);
  }

private:
  double m_rate;
  double m_meanBurst;
  int64_t m_remaining = 0;
};

} // namespace dqnaf::sim

#endif // DQNAF_SIM_LOSS_MODEL_HPP
