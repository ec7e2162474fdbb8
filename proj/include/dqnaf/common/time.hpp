/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_COMMON_TIME_HPP
#define DQNAF_COMMON_TIME_HPP

#include <chrono>
#include <cstdint>

namespace dqnaf {

/// Simulation timestamps and durations share one integer nanosecond representation,
/// so event ordering never depends on floating-point rounding.
using Duration = std::chrono::nanoseconds;
using Time = std::chrono::nanoseconds;

constexpr Duration
milliseconds(double ms)
{
  return Duration(static_cast<int64_t>(ms * 1e6 + (ms >= 0 ? 0.5 : -0.5)));
}

constexpr Duration
seconds(double s)
{
  return Duration(static_cast<int64_t>(s * 1e9 + (s >= 0 ? 0.5 : -0.5)));
}

constexpr double
toMilliseconds(Duration d)
{
  return static_cast<double>(d.count()) / 1e6;
}

constexpr double
toSeconds(Duration d)
{
  return static_cast<double>(d.count()) / 1e9;
}

} // namespace dqnaf

#endif // DQNAF_COMMON_TIME_HPP
