/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/neural/replay-memory.hpp"

#include <numeric>
#include <string>

namespace dqnaf::neural {

ReplayMemory::ReplayMemory(size_t capacity)
  : m_capacity(capacity)
{
  if (capacity == 0) {
    throw std::invalid_argument("replay capacity must be positive");
  }
  m_ring.reserve(capacity);
}

void
ReplayMemory::push(Experience e)
{
  ++m_pushes;
  if (m_ring.size() < m_capacity) {
    m_ring.push_back(std::move(e));
    return;
  }
  m_ring[m_head] = std::move(e);
  m_head = (m_head + 1) % m_capacity;
}

const Experience&
ReplayMemory::at(size_t i) const
{
  if (i >= m_ring.size()) {
    throw std::out_of_range("replay index out of range");
  }
  return m_ring[(m_head + i) % m_ring.size()];
}

std::vector<size_t>
ReplayMemory::sampleIndices(size_t count, Rng& rng) const
{
  if (count > m_ring.size()) {
    throw InsufficientSamples("requested " + std::to_string(count) + " samples from memory of " +
                              std::to_string(m_ring.size()));
  }
  std::vector<size_t> idx(m_ring.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  for (size_t i = 0; i < count; ++i) {
    size_t j = i + static_cast<size_t>(rng.below(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  return idx;
}

std::vector<Experience>
ReplayMemory::sample(size_t count, Rng& rng) const
{
  std::vector<Experience> out;
  out.reserve(count);
  for (size_t i : sampleIndices(count, rng)) {
    out.push_back(at(i));
  }
  return out;
}

} // namespace dqnaf::neural
