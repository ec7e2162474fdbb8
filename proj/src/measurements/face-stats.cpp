/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/measurements/face-stats.hpp"

#include <algorithm>
#include <cmath>

namespace dqnaf::measurements {

void
FaceStats::recordSent(Time now)
{
  m_sentLog.push_back(now);
  ++m_pending;
  eta(now);
}

size_t
FaceStats::eta(Time now)
{
  Time horizon = now - m_config.etaInterval;
  while (!m_sentLog.empty() && m_sentLog.front() <= horizon) {
    m_sentLog.pop_front();
  }
  // sends stamped after `now` are not counted (queries are never in the past in practice)
  auto upper = std::upper_bound(m_sentLog.begin(), m_sentLog.end(), now);
  return static_cast<size_t>(upper - m_sentLog.begin());
}

double
FaceStats::omega() const
{
  if (m_window.empty()) {
    return 1.0;
  }
  return static_cast<double>(m_delivered) / static_cast<double>(m_window.size());
}

void
FaceStats::takePending()
{
  if (m_pending == 0) {
    throw UnmatchedOutcome("outcome recorded for a face with no pending send");
  }
  --m_pending;
}

void
FaceStats::recordAbandoned()
{
  takePending();
}

void
FaceStats::pushOutcome(bool delivered, Time now)
{
  size_t w = std::max(eta(now), m_config.minWindow);
  m_window.push_back(delivered);
  m_delivered += delivered ? 1 : 0;
  while (m_window.size() > w) {
    m_delivered -= m_window.front() ? 1 : 0;
    m_window.pop_front();
  }
}

void
FaceStats::recordDelivered(Duration rtt, Time now)
{
  takePending();
  updateSrtt(rtt);
  pushOutcome(true, now);
  m_delta = 1;
  m_consecutiveLosses = 0;
}

void
FaceStats::recordLost(LossCause cause, Time now)
{
  takePending();
  pushOutcome(false, now);
  if (cause == LossCause::TIMEOUT) {
    m_delta = 0;
  }
  ++m_consecutiveLosses;
}

Duration
FaceStats::updateSrtt(Duration sample)
{
  if (sample <= Duration::zero()) {
    throw NonPositiveSample("RTT sample must be positive");
  }
  double rtt = static_cast<double>(sample.count());
  double srtt;
  double rttvar;
  if (!m_srtt) {
    srtt = rtt;
    rttvar = rtt / 2;
  }
  else {
    double prev = static_cast<double>(m_srtt->count());
    rttvar = (1 - m_config.rttvarBeta) * static_cast<double>(m_rttvar.count()) +
             m_config.rttvarBeta * std::abs(prev - rtt);
    srtt = (1 - m_config.srttAlpha) * prev + m_config.srttAlpha * rtt;
  }
  m_srtt = Duration(std::llround(srtt));
  m_rttvar = Duration(std::llround(rttvar));
  m_rto = std::clamp(*m_srtt + 4 * m_rttvar, m_config.rtoMin, m_config.rtoMax);
  return *m_srtt;
}

void
FaceStats::setEstimates(Duration srtt, Duration rttvar)
{
  m_srtt = srtt;
  m_rttvar = rttvar;
  m_rto = std::clamp(srtt + 4 * rttvar, m_config.rtoMin, m_config.rtoMax);
}

FaceStats&
FaceStatsTable::get(FaceId face)
{
  auto it = m_stats.find(face);
  if (it == m_stats.end()) {
    it = m_stats.emplace(face, FaceStats(m_config)).first;
  }
  return it->second;
}

const FaceStats*
FaceStatsTable::find(FaceId face) const
{
  auto it = m_stats.find(face);
  return it == m_stats.end() ? nullptr : &it->second;
}

StateVector
FaceStatsTable::stateVector(const std::vector<FaceId>& faces) const
{
  StateVector state;
  state.reserve(2 * faces.size());
  for (FaceId face : faces) {
    const FaceStats* stats = find(face);
    if (stats == nullptr || !stats->hasOutcomes()) {
      state.push_back(1.0);
      state.push_back(1.0);
    }
    else {
      state.push_back(stats->omega());
      state.push_back(static_cast<double>(stats->delta()));
    }
  }
  return state;
}

} // namespace dqnaf::measurements
