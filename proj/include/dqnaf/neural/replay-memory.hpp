/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NEURAL_REPLAY_MEMORY_HPP
#define DQNAF_NEURAL_REPLAY_MEMORY_HPP

#include "dqnaf/common/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dqnaf::neural {

struct Experience
{
  std::vector<double> state;
  size_t action = 0;
  double reward = 0.0;
  double qAtAction = 0.0;

  friend bool operator==(const Experience&, const Experience&) = default;
};

/// FIFO ring of the most recent experiences.
class ReplayMemory
{
public:
  class InsufficientSamples : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  explicit
  ReplayMemory(size_t capacity = 2000);

  void
  push(Experience e);

  /// `count` distinct entries, uniformly without replacement (partial Fisher-Yates).
  std::vector<Experience>
  sample(size_t count, Rng& rng) const;

  /// Same draw as sample(), as ring indices.
  std::vector<size_t>
  sampleIndices(size_t count, Rng& rng) const;

  size_t
  size() const
  {
    return m_ring.size();
  }

  size_t
  capacity() const
  {
    return m_capacity;
  }

  uint64_t
  pushCount() const
  {
    return m_pushes;
  }

  /// i-th oldest entry.
  const Experience&
  at(size_t i) const;

private:
  size_t m_capacity;
  std::vector<Experience> m_ring;
  size_t m_head = 0; // oldest slot once full
  uint64_t m_pushes = 0;
};

} // namespace dqnaf::neural

#endif // DQNAF_NEURAL_REPLAY_MEMORY_HPP
