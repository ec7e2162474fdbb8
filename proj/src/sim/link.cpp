/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/sim/link.hpp"

#include <algorithm>

namespace dqnaf::sim {

Link::Link(LinkParams params)
  : m_params(params)
{
  if (m_params.bandwidthBps == 0) {
    throw std::invalid_argument("link bandwidth must be positive");
  }
  if (m_params.delay < Duration::zero()) {
    throw std::invalid_argument("link delay must be non-negative");
  }
}

Duration
Link::serializationTime(uint64_t sizeBits) const
{
  // ceil(bits * 1e9 / bps) nanoseconds
  unsigned __int128 num = static_cast<unsigned __int128>(sizeBits) * 1'000'000'000u;
  auto ns = static_cast<int64_t>((num + m_params.bandwidthBps - 1) / m_params.bandwidthBps);
  return Duration(ns);
}

size_t
Link::queueOccupancy(Direction dir, Time now)
{
  auto& d = m_dirs[index(dir)];
  while (!d.waitingStarts.empty() && d.waitingStarts.front() <= now) {
    d.waitingStarts.pop_front();
  }
  return d.waitingStarts.size();
}

bool
Link::inOutage(Direction dir, Time t) const
{
  const auto& outages = m_dirs[index(dir)].outages;
  return std::any_of(outages.begin(), outages.end(),
                     [t] (const Window& w) { return w.from <= t && t < w.to; });
}

TransmitResult
Link::transmit(Direction dir, uint64_t sizeBits, Time now)
{
  auto& d = m_dirs[index(dir)];
  ++d.counters.entered;

  if (inOutage(dir, now)) {
    ++d.counters.outageDrops;
    return {TransmitOutcome::OUTAGE_DROP};
  }

  for (auto& period : d.bursts) {
    if (period.from <= now && now < period.to) {
      if (period.model.shouldDrop(period.rng)) {
        ++d.counters.errorDrops;
        return {TransmitOutcome::ERROR_DROP};
      }
      break;
    }
  }

  Time start = std::max(now, d.busyUntil);
  if (start > now && queueOccupancy(dir, now) >= m_params.queueCapacity) {
    ++d.counters.queueDrops;
    return {TransmitOutcome::QUEUE_DROP};
  }
  if (start > now) {
    d.waitingStarts.push_back(start);
  }
  d.busyUntil = start + serializationTime(sizeBits);
  ++d.counters.arrived;
  return {TransmitOutcome::ARRIVE, d.busyUntil + m_params.delay};
}

void
Link::applyOutage(Direction dir, Time from, Time to)
{
  if (from >= to) {
    throw InvalidWindow("outage window must satisfy from < to");
  }
  m_dirs[index(dir)].outages.push_back({from, to});
}

void
Link::addBurstPeriod(Direction dir, Time from, Time to, BurstLossModel model, Rng rng)
{
  if (from >= to) {
    throw InvalidWindow("burst window must satisfy from < to");
  }
  m_dirs[index(dir)].bursts.push_back({from, to, std::move(model), std::move(rng)});
}

} // namespace dqnaf::sim
