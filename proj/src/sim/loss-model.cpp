/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/sim/loss-model.hpp"

#include <cmath>

namespace dqnaf::sim {

bool
BurstLossModel::shouldDrop(Rng& rng)
{
  if (m_remaining > 0) {
    --m_remaining;
    return true;
  }
  if (m_rate <= 0.0 || rng.uniform() >= m_rate) {
    return false;
  }
  auto length = static_cast<int64_t>(std::floor(rng.exponential(m_meanBurst) + 0.5));
  m_remaining = std::max<int64_t>(length, 1) - 1;
  return true;
}

} // namespace dqnaf::sim
