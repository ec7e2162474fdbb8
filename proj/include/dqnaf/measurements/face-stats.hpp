/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_MEASUREMENTS_FACE_STATS_HPP
#define DQNAF_MEASUREMENTS_FACE_STATS_HPP

#include "dqnaf/common/time.hpp"
#include "dqnaf/ndn/packet.hpp"

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dqnaf::measurements {

using ndn::FaceId;

enum class LossCause {
  TIMEOUT,
  NACK,
};

struct Delivered
{
  Duration rtt;
};

struct Lost
{
  LossCause cause;
};

struct MeasurementConfig
{
  /// Interval over which eta counts sends.
  Duration etaInterval = milliseconds(100);
  /// Floor of the omega window size.
  size_t minWindow = 10;
  double srttAlpha = 1.0 / 8;
  double rttvarBeta = 1.0 / 4;
  Duration rtoMin = milliseconds(200);
  Duration rtoMax = milliseconds(2000);
  /// Loss-detection timeout for a face that has no RTT sample yet.
  Duration rtoUnmeasured = milliseconds(200);
};

/**
 * Delivery bookkeeping for one face.
 *
 * - eta: sends within (now - t, now].
 * - omega: delivered / size over the last W defined outcomes, W = max(eta, minWindow).
 * - delta: 0 after a timeout on the face, back to 1 on the next delivery.
 */
class FaceStats
{
public:
  class UnmatchedOutcome : public std::logic_error
  {
  public:
    using std::logic_error::logic_error;
  };

  class NonPositiveSample : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  explicit
  FaceStats(MeasurementConfig config = {})
    : m_config(config)
  {
  }

  void
  recordSent(Time now);

  void
  recordDelivered(Duration rtt, Time now);

  void
  recordLost(LossCause cause, Time now);

  /// A send that will never get an outcome, e.g. the losing branch of a multicast.
  void
  recordAbandoned();

  /// EWMA update; returns the new srtt.
  Duration
  updateSrtt(Duration sample);

  /// Overwrites the RTT estimator state, e.g. when restoring a snapshot.
  void
  setEstimates(Duration srtt, Duration rttvar);

  size_t
  eta(Time now);

  double
  omega() const;

  int
  delta() const
  {
    return m_delta;
  }

  std::optional<Duration>
  srtt() const
  {
    return m_srtt;
  }

  Duration
  rttvar() const
  {
    return m_rttvar;
  }

  Duration
  rto() const
  {
    return m_rto;
  }

  /// Timeout to arm for a new send on this face.
  Duration
  lossTimeout() const
  {
    return m_srtt ? m_rto : m_config.rtoUnmeasured;
  }

  bool
  hasOutcomes() const
  {
    return !m_window.empty();
  }

  size_t
  windowSize() const
  {
    return m_window.size();
  }

  size_t
  pendingCount() const
  {
    return m_pending;
  }

  uint64_t
  consecutiveLosses() const
  {
    return m_consecutiveLosses;
  }

private:
  void
  pushOutcome(bool delivered, Time now);

  void
  takePending();

private:
  MeasurementConfig m_config;
  std::deque<Time> m_sentLog;
  std::deque<bool> m_window; // true = delivered
  size_t m_delivered = 0;
  int m_delta = 1;
  std::optional<Duration> m_srtt;
  Duration m_rttvar{0};
  Duration m_rto{milliseconds(200)};
  size_t m_pending = 0;
  uint64_t m_consecutiveLosses = 0;
};

/// Flattened (omega, delta) pairs in a fixed face order.
using StateVector = std::vector<double>;

class FaceStatsTable
{
public:
  explicit
  FaceStatsTable(MeasurementConfig config = {})
    : m_config(config)
  {
  }

  FaceStats&
  get(FaceId face);

  const FaceStats*
  find(FaceId face) const;

  /// [omega_1, delta_1, omega_2, delta_2, ...]; faces without outcomes report (1, 1).
  StateVector
  stateVector(const std::vector<FaceId>& faces) const;

  const MeasurementConfig&
  config() const
  {
    return m_config;
  }

private:
  MeasurementConfig m_config;
  std::map<FaceId, FaceStats> m_stats;
};

} // namespace dqnaf::measurements

#endif // DQNAF_MEASUREMENTS_FACE_STATS_HPP
