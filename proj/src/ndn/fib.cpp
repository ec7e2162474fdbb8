/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/ndn/fib.hpp"

#include <algorithm>

namespace dqnaf::ndn {

bool
FibEntry::hasNextHop(FaceId face) const
{
  return rankOf(face) >= 0;
}

void
FibEntry::addOrUpdateNextHop(FaceId face, uint64_t cost)
{
  std::erase_if(m_nexthops, [face] (const NextHop& nh) { return nh.face == face; });
  auto pos = std::upper_bound(m_nexthops.begin(), m_nexthops.end(), cost,
                              [] (uint64_t c, const NextHop& nh) { return c < nh.cost; });
  m_nexthops.insert(pos, NextHop{face, cost});
}

int
FibEntry::rankOf(FaceId face) const
{
  for (size_t i = 0; i < m_nexthops.size(); ++i) {
    if (m_nexthops[i].face == face) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

FibEntry&
Fib::insert(const Name& prefix)
{
  auto it = m_entries.find(prefix);
  if (it == m_entries.end()) {
    it = m_entries.emplace(prefix, FibEntry(prefix)).first;
  }
  return it->second;
}

const FibEntry*
Fib::findLongestPrefixMatch(const Name& name) const
{
  for (size_t len = name.size() + 1; len-- > 0;) {
    if (const auto* entry = findExactMatch(name.getPrefix(len))) {
      return entry;
    }
  }
  return nullptr;
}

const FibEntry*
Fib::findExactMatch(const Name& prefix) const
{
  auto it = m_entries.find(prefix);
  return it == m_entries.end() ? nullptr : &it->second;
}

} // namespace dqnaf::ndn
