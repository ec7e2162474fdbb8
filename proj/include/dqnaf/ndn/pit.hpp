/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NDN_PIT_HPP
#define DQNAF_NDN_PIT_HPP

#include "dqnaf/ndn/packet.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace dqnaf::ndn {

struct OutRecord
{
  Time sendTime{0};
  uint64_t nonce = 0;
  /// Set once a Delivered or Lost outcome has been attributed to this record.
  bool resolved = false;
};

struct PitEntry
{
  Name name;
  std::set<FaceId> inFaces;
  std::map<FaceId, OutRecord> outRecords;
  Time created{0};
  Time expiry{0};
};

enum class InsertOutcome {
  NEW_ENTRY,
  AGGREGATED,
  DUPLICATE_NONCE,
};

struct InsertResult
{
  InsertOutcome outcome;
  /// Null for DUPLICATE_NONCE.
  PitEntry* entry = nullptr;
};

struct SatisfyResult
{
  std::set<FaceId> downFaces;
  std::optional<Duration> rtt;
  bool matched = false;
  /// Out-records of the removed entry, so the caller can settle the other upstreams.
  std::map<FaceId, OutRecord> outRecords;
};

struct ExpiredRecord
{
  Name name;
  std::map<FaceId, OutRecord> outRecords;
};

/// Lifetime counters for the end-of-run leak audit.
struct PitCounters
{
  uint64_t created = 0;
  uint64_t satisfied = 0;
  uint64_t expired = 0;
  uint64_t nacked = 0;
};

/**
 * Pending Interest Table with a dead-nonce window for loop suppression.
 *
 * An entry leaves the table exactly once: satisfied by Data, expired
 * (expiry <= now, inclusive), or erased after NACK exhaustion.
 */
class Pit
{
public:
  InsertResult
  insertOrAggregate(const Interest& interest, FaceId inFace, Time now);

  SatisfyResult
  satisfy(const Data& data, FaceId arrivalFace, Time now);

  std::vector<ExpiredRecord>
  expire(Time now);

  /// Removes an entry whose upstreams all returned NACK.
  bool
  eraseNacked(const Name& name);

  PitEntry*
  find(const Name& name);

  size_t
  size() const
  {
    return m_entries.size();
  }

  const PitCounters&
  counters() const
  {
    return m_counters;
  }

private:
  void
  pruneDeadNonces(Time now);

private:
  std::map<Name, PitEntry> m_entries;
  /// (name, nonce) -> time until which the pair counts as seen.
  std::map<std::pair<Name, uint64_t>, Time> m_deadNonces;
  PitCounters m_counters;
};

} // namespace dqnaf::ndn

#endif // DQNAF_NDN_PIT_HPP
