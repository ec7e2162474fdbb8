/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/ndn/pit.hpp"

#include <cassert>

namespace dqnaf::ndn {

InsertResult
Pit::insertOrAggregate(const Interest& interest, FaceId inFace, Time now)
{
  assert(interest.lifetime > Duration::zero());
  pruneDeadNonces(now);

  auto key = std::make_pair(interest.name, interest.nonce);
  if (m_deadNonces.contains(key)) {
    return {InsertOutcome::DUPLICATE_NONCE, nullptr};
  }
  m_deadNonces.emplace(std::move(key), now + interest.lifetime);

  auto it = m_entries.find(interest.name);
  if (it != m_entries.end()) {
    it->second.inFaces.insert(inFace);
    it->second.expiry = std::max(it->second.expiry, now + interest.lifetime);
    return {InsertOutcome::AGGREGATED, &it->second};
  }

  PitEntry entry;
  entry.name = interest.name;
  entry.inFaces.insert(inFace);
  entry.created = now;
  entry.expiry = now + interest.lifetime;
  auto [pos, inserted] = m_entries.emplace(interest.name, std::move(entry));
  ++m_counters.created;
  return {InsertOutcome::NEW_ENTRY, &pos->second};
}

SatisfyResult
Pit::satisfy(const Data& data, FaceId arrivalFace, Time now)
{
  SatisfyResult result;
  auto it = m_entries.find(data.name);
  if (it == m_entries.end()) {
    return result;
  }

  result.matched = true;
  result.downFaces = std::move(it->second.inFaces);
  auto out = it->second.outRecords.find(arrivalFace);
  if (out != it->second.outRecords.end()) {
    result.rtt = now - out->second.sendTime;
  }
  result.outRecords = std::move(it->second.outRecords);
  m_entries.erase(it);
  ++m_counters.satisfied;
  return result;
}

std::vector<ExpiredRecord>
Pit::expire(Time now)
{
  std::vector<ExpiredRecord> expired;
  for (auto it = m_entries.begin(); it != m_entries.end();) {
    if (it->second.expiry <= now) {
      expired.push_back({it->first, std::move(it->second.outRecords)});
      it = m_entries.erase(it);
      ++m_counters.expired;
    }
    else {
      ++it;
    }
  }
  return expired;
}

bool
Pit::eraseNacked(const Name& name)
{
  if (m_entries.erase(name) == 0) {
    return false;
  }
  ++m_counters.nacked;
  return true;
}

PitEntry*
Pit::find(const Name& name)
{
  auto it = m_entries.find(name);
  return it == m_entries.end() ? nullptr : &it->second;
}

void
Pit::pruneDeadNonces(Time now)
{
  std::erase_if(m_deadNonces, [now] (const auto& kv) { return kv.second <= now; });
}

} // namespace dqnaf::ndn
