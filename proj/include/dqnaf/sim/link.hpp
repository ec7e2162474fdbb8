/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_SIM_LINK_HPP
#define DQNAF_SIM_LINK_HPP

#include "dqnaf/common/rng.hpp"
#include "dqnaf/common/time.hpp"
#include "dqnaf/sim/loss-model.hpp"

#include <array>
#include <deque>
#include <stdexcept>
#include <vector>

namespace dqnaf::sim {

enum class Direction {
  A_TO_B = 0,
  B_TO_A = 1,
};

enum class TransmitOutcome {
  ARRIVE,
  QUEUE_DROP,
  ERROR_DROP,
  OUTAGE_DROP,
};

struct TransmitResult
{
  TransmitOutcome outcome;
  /// Meaningful only for ARRIVE.
  Time arrival{0};
};

struct LinkParams
{
  Duration delay = milliseconds(10);
  uint64_t bandwidthBps = 1'000'000;
  /// Packets allowed to wait behind the one being serialized.
  size_t queueCapacity = 10;
};

struct LinkCounters
{
  uint64_t entered = 0;
  uint64_t arrived = 0;
  uint64_t queueDrops = 0;
  uint64_t errorDrops = 0;
  uint64_t outageDrops = 0;
};

/**
 * Full-duplex point-to-point link with a drop-tail queue per direction.
 *
 * A packet entering a direction is checked against outage windows (half-open
 * [from, to)), then against the active burst loss period, then against the queue.
 * Accepted packets are serialized FIFO and arrive after the propagation delay.
 */
class Link
{
public:
  class InvalidWindow : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  explicit
  Link(LinkParams params);

  TransmitResult
  transmit(Direction dir, uint64_t sizeBits, Time now);

  void
  applyOutage(Direction dir, Time from, Time to);

  /// Activates a burst loss process on [from, to); the model's burst state resets per period.
  void
  addBurstPeriod(Direction dir, Time from, Time to, BurstLossModel model, Rng rng);

  size_t
  queueOccupancy(Direction dir, Time now);

  bool
  inOutage(Direction dir, Time t) const;

  Duration
  serializationTime(uint64_t sizeBits) const;

  const LinkParams&
  params() const
  {
    return m_params;
  }

  const LinkCounters&
  counters(Direction dir) const
  {
    return m_dirs[index(dir)].counters;
  }

private:
  struct Window
  {
    Time from;
    Time to;
  };

  struct BurstPeriod
  {
    Time from;
    Time to;
    BurstLossModel model;
    Rng rng;
  };

  struct DirectionState
  {
    Time busyUntil{0};
    std::deque<Time> waitingStarts; // serialization start times of queued packets
    std::vector<Window> outages;
    std::vector<BurstPeriod> bursts;
    LinkCounters counters;
  };

  static size_t
  index(Direction dir)
  {
    return static_cast<size_t>(dir);
  }

private:
  LinkParams m_params;
  std::array<DirectionState, 2> m_dirs;
};

} // namespace dqnaf::sim

#endif // DQNAF_SIM_LINK_HPP
