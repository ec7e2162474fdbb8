/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NDN_CS_HPP
#define DQNAF_NDN_CS_HPP

#include "dqnaf/ndn/packet.hpp"

#include <list>
#include <map>
#include <optional>

namespace dqnaf::ndn {

/// LRU content store. Capacity 0 disables caching entirely.
class Cs
{
public:
  explicit
  Cs(size_t capacity = 0)
    : m_capacity(capacity)
  {
  }

  void
  insert(const Data& data);

  /// A hit refreshes the entry's recency.
  std::optional<Data>
  lookup(const Name& name);

  size_t
  size() const
  {
    return m_lru.size();
  }

  size_t
  capacity() const
  {
    return m_capacity;
  }

private:
  size_t m_capacity;
  std::list<Data> m_lru; // front = most recent
  std::map<Name, std::list<Data>::iterator> m_index;
};

} // namespace dqnaf::ndn

#endif // DQNAF_NDN_CS_HPP
