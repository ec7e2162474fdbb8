/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NDN_FIB_HPP
#define DQNAF_NDN_FIB_HPP

#include "dqnaf/ndn/packet.hpp"

#include <map>
#include <vector>

namespace dqnaf::ndn {

struct NextHop
{
  FaceId face = 0;
  uint64_t cost = 0;
};

/**
 * Forwarding entry for one prefix.
 *
 * Nexthops stay sorted by ascending cost; equal-cost nexthops keep insertion order,
 * which is what "best classified" means for Best-Route and the tie-breaks elsewhere.
 */
class FibEntry
{
public:
  explicit
  FibEntry(Name prefix)
    : m_prefix(std::move(prefix))
  {
  }

  const Name&
  getPrefix() const
  {
    return m_prefix;
  }

  const std::vector<NextHop>&
  getNextHops() const
  {
    return m_nexthops;
  }

  bool
  hasNextHop(FaceId face) const;

  /// Inserts or re-costs a nexthop. A re-costed nexthop moves behind its new equals.
  void
  addOrUpdateNextHop(FaceId face, uint64_t cost);

  /// Rank of the face in the nexthop list, or -1.
  int
  rankOf(FaceId face) const;

private:
  Name m_prefix;
  std::vector<NextHop> m_nexthops;
};

class Fib
{
public:
  FibEntry&
  insert(const Name& prefix);

  void
  addNextHop(const Name& prefix, FaceId face, uint64_t cost)
  {
    insert(prefix).addOrUpdateNextHop(face, cost);
  }

  /// Entry with the longest prefix of name, or nullptr.
  const FibEntry*
  findLongestPrefixMatch(const Name& name) const;

  const FibEntry*
  findExactMatch(const Name& prefix) const;

  size_t
  size() const
  {
    return m_entries.size();
  }

private:
  std::map<Name, FibEntry> m_entries;
};

} // namespace dqnaf::ndn

#endif // DQNAF_NDN_FIB_HPP
