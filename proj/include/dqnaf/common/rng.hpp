/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_COMMON_RNG_HPP
#define DQNAF_COMMON_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace dqnaf {

/**
 * Seedable pseudorandom stream.
 *
 * Raw bits come from std::mt19937_64, whose output sequence is fixed by the standard.
 * The conversions to doubles and integers are done here rather than through
 * <random> distributions, whose algorithms differ between standard libraries.
 */
class Rng
{
public:
  explicit
  Rng(uint64_t seed = 0)
    : m_engine(seed)
  {
  }

  /// Independent stream for (base seed, run index, purpose).
  static Rng
  stream(uint64_t baseSeed, uint64_t runIndex, std::string_view purpose);

  uint64_t
  nextBits()
  {
    return m_engine();
  }

  /// Uniform in [0, 1) with 53 random bits.
  double
  uniform()
  {
    return static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
  }

  double
  uniform(double lo, double hi)
  {
    return lo + (hi - lo) * uniform();
  }

  /// Uniform integer in [0, n), n > 0, without modulo bias.
  uint64_t
  below(uint64_t n);

  /// Exponential sample with the given mean (inverse CDF, one draw).
  double
  exponential(double mean);

private:
  std::mt19937_64 m_engine;
};

/// SplitMix64 finalizer; used to derive stream seeds.
uint64_t
mixSeed(uint64_t x);

} // namespace dqnaf

#endif // DQNAF_COMMON_RNG_HPP
