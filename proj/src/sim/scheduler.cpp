/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/sim/scheduler.hpp"

#include <string>

namespace dqnaf::sim {

EventId
Scheduler::schedule(Time at, Action action)
{
  if (at < m_now) {
    throw SchedulingInPast("event at " + std::to_string(at.count()) + " ns is before clock " +
                           std::to_string(m_now.count()) + " ns");
  }
  EventId id = m_nextSeq++;
  m_queue.push(Event{at, id, std::move(action)});
  m_live.insert(id);
  return id;
}

void
Scheduler::cancel(EventId id)
{
  if (m_live.erase(id) > 0) {
    m_cancelled.insert(id);
  }
}

uint64_t
Scheduler::runUntil(Time tEnd)
{
  uint64_t processed = 0;
  while (!m_queue.empty() && m_queue.top().time <= tEnd) {
    // the action may schedule more events, so move it out before popping
    Event ev = std::move(const_cast<Event&>(m_queue.top()));
    m_queue.pop();
    if (m_cancelled.erase(ev.seq) > 0) {
      continue;
    }
    m_live.erase(ev.seq);
    m_now = ev.time;
    ev.action();
    ++processed;
  }
  if (tEnd > m_now) {
    m_now = tEnd;
  }
  return processed;
}

} // namespace dqnaf::sim
