/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/ndn/cs.hpp"

namespace dqnaf::ndn {

void
Cs::insert(const Data& data)
{
  if (m_capacity == 0) {
    return;
  }
  if (auto it = m_index.find(data.name); it != m_index.end()) {
    m_lru.erase(it->second);
    m_index.erase(it);
  }
  m_lru.push_front(data);
  m_index[data.name] = m_lru.begin();
  while (m_lru.size() > m_capacity) {
    m_index.erase(m_lru.back().name);
    m_lru.pop_back();
  }
}

std::optional<Data>
Cs::lookup(const Name& name)
{
  auto it = m_index.find(name);
  if (it == m_index.end()) {
    return std::nullopt;
  }
  m_lru.splice(m_lru.begin(), m_lru, it->second);
  return *it->second;
}

} // namespace dqnaf::ndn
