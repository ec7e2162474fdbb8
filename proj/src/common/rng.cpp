/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/common/rng.hpp"

#include <cmath>

namespace dqnaf {

uint64_t
mixSeed(uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng
Rng::stream(uint64_t baseSeed, uint64_t runIndex, std::string_view purpose)
{
  // FNV-1a over the purpose label
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : purpose) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(mixSeed(mixSeed(mixSeed(baseSeed) ^ runIndex) ^ h));
}

uint64_t
Rng::below(uint64_t n)
{
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = m_engine();
  } while (x >= limit);
  return x % n;
}

double
Rng::exponential(double mean)
{
  // 1 - u lies in (0, 1], so the log is finite
  return -mean * std::log(1.0 - uniform());
}

} // namespace dqnaf
