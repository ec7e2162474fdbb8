/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_SIM_SCHEDULER_HPP
#define DQNAF_SIM_SCHEDULER_HPP

#include "dqnaf/common/time.hpp"

#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace dqnaf::sim {

using EventId = uint64_t;

/**
 * Discrete-event queue with a virtual clock.
 *
 * Events fire in (time, sequence) order; the sequence number makes same-time
 * events FIFO, so a replay with the same inputs is identical.
 */
class Scheduler
{
public:
  class SchedulingInPast : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  using Action = std::function<void()>;

  EventId
  schedule(Time at, Action action);

  EventId
  scheduleAfter(Duration delay, Action action)
  {
    return schedule(m_now + delay, std::move(action));
  }

  /// A cancelled event is skipped when it reaches the head of the queue.
  void
  cancel(EventId id);

  /// Processes every event with time <= tEnd, then sets the clock to tEnd.
  uint64_t
  runUntil(Time tEnd);

  Time
  now() const
  {
    return m_now;
  }

  size_t
  pendingCount() const
  {
    return m_live.size();
  }

private:
  struct Event
  {
    Time time;
    uint64_t seq;
    Action action;
  };

  struct Later
  {
    bool
    operator()(const Event& a, const Event& b) const
    {
      return a.time != b.time ? a.time > b.time : a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> m_queue;
  std::unordered_set<EventId> m_live;
  std::unordered_set<EventId> m_cancelled;
  Time m_now{0};
  uint64_t m_nextSeq = 0;
};

} // namespace dqnaf::sim

#endif // DQNAF_SIM_SCHEDULER_HPP
