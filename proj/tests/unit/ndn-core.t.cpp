/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/ndn/cs.hpp"
#include "dqnaf/ndn/fib.hpp"
#include "dqnaf/ndn/name.hpp"
#include "dqnaf/ndn/packet.hpp"
#include "dqnaf/ndn/pit.hpp"

#include <doctest.h>

using namespace dqnaf;
using namespace dqnaf::ndn;

namespace {

Interest
makeInterest(const std::string& uri, uint64_t nonce, double lifetimeMs = 2000)
{
  Interest i;
  i.name = Name::fromUri(uri);
  i.nonce = nonce;
  i.lifetime = milliseconds(lifetimeMs);
  return i;
}

Data
makeData(const std::string& uri)
{
  Data d;
  d.name = Name::fromUri(uri);
  d.payloadSize = 1024;
  return d;
}

} // namespace

TEST_SUITE("Name")
{
TEST_CASE("uri round trip and ordering")
{
  Name n = Name::fromUri("/prefix/42");
  CHECK(n.size() == 2);
  CHECK(n.at(0) == "prefix");
  CHECK(n.toUri() == "/prefix/42");
  CHECK(Name::fromUri("/").empty());
  CHECK(Name::fromUri("/a") < Name::fromUri("/a/b"));
  CHECK(Name::fromUri("/a/b") < Name::fromUri("/b"));
  CHECK(Name::fromUri("/a").isPrefixOf(Name::fromUri("/a/b")));
  CHECK_FALSE(Name::fromUri("/a/b").isPrefixOf(Name::fromUri("/a")));
  CHECK(Name().isPrefixOf(n));
  CHECK(n.getPrefix(1) == Name::fromUri("/prefix"));
}

TEST_CASE("sequence numbers append as components")
{
  Name n = Name::fromUri("/p");
  n.appendNumber(7);
  CHECK(n.toUri() == "/p/7");
}
}

TEST_SUITE("Pit")
{
TEST_CASE("new entry expires one lifetime later")
{
  Pit pit;
  auto r = pit.insertOrAggregate(makeInterest("/p/1", 1, 2000), 1, milliseconds(10));
  CHECK(r.outcome == InsertOutcome::NEW_ENTRY);
  REQUIRE(r.entry != nullptr);
  CHECK(r.entry->expiry == milliseconds(2010));
  CHECK(pit.size() == 1);
}

TEST_CASE("same name with a fresh nonce aggregates")
{
  Pit pit;
  pit.insertOrAggregate(makeInterest("/p/1", 1), 1, Time{0});
  auto r = pit.insertOrAggregate(makeInterest("/p/1", 2), 2, milliseconds(5));
  CHECK(r.outcome == InsertOutcome::AGGREGATED);
  CHECK(r.entry->inFaces == std::set<FaceId>{1, 2});
  CHECK(pit.size() == 1);
}

TEST_CASE("replayed nonce is a duplicate")
{
  Pit pit;
  pit.insertOrAggregate(makeInterest("/p/1", 9), 1, Time{0});
  auto r = pit.insertOrAggregate(makeInterest("/p/1", 9), 2, milliseconds(1));
  CHECK(r.outcome == InsertOutcome::DUPLICATE_NONCE);
}

TEST_CASE("duplicate nonce is remembered after satisfaction, for one lifetime")
{
  Pit pit;
  pit.insertOrAggregate(makeInterest("/p/1", 9, 100), 1, Time{0});
  pit.satisfy(makeData("/p/1"), 3, milliseconds(20));
  CHECK(pit.insertOrAggregate(makeInterest("/p/1", 9, 100), 1, milliseconds(50)).outcome ==
        InsertOutcome::DUPLICATE_NONCE);
  CHECK(pit.insertOrAggregate(makeInterest("/p/1", 9, 100), 1, milliseconds(150)).outcome ==
        InsertOutcome::NEW_ENTRY);
}

TEST_CASE("satisfy measures rtt on the arrival face")
{
  Pit pit;
  auto r = pit.insertOrAggregate(makeInterest("/p/1", 1), 1, milliseconds(90));
  r.entry->outRecords[3] = OutRecord{milliseconds(100), 1, false};
  auto s = pit.satisfy(makeData("/p/1"), 3, milliseconds(140));
  CHECK(s.matched);
  REQUIRE(s.rtt.has_value());
  CHECK(*s.rtt == milliseconds(40));
  CHECK(s.downFaces == std::set<FaceId>{1});
  CHECK(pit.size() == 0);
}

TEST_CASE("unsolicited data does not match")
{
  Pit pit;
  auto s = pit.satisfy(makeData("/q/9"), 1, Time{0});
  CHECK_FALSE(s.matched);
  CHECK(s.downFaces.empty());
  CHECK_FALSE(s.rtt.has_value());
}

TEST_CASE("data fans out to every in-face")
{
  Pit pit;
  pit.insertOrAggregate(makeInterest("/p/1", 1), 1, Time{0});
  pit.insertOrAggregate(makeInterest("/p/1", 2), 2, Time{0});
  auto s = pit.satisfy(makeData("/p/1"), 3, milliseconds(1));
  CHECK(s.downFaces == std::set<FaceId>{1, 2});
  CHECK(pit.size() == 0);
}

TEST_CASE("expiry boundary is inclusive")
{
  Pit pit;
  pit.insertOrAggregate(makeInterest("/p/1", 1, 500), 1, Time{0});
  CHECK(pit.expire(milliseconds(499)).empty());
  auto expired = pit.expire(milliseconds(500));
  REQUIRE(expired.size() == 1);
  CHECK(expired[0].name == Name::fromUri("/p/1"));
  CHECK(pit.expire(milliseconds(600)).empty());
}

TEST_CASE("expire removes only entries past their expiry")
{
  Pit pit;
  pit.insertOrAggregate(makeInterest("/p/1", 1, 100), 1, Time{0});
  pit.insertOrAggregate(makeInterest("/p/2", 2, 200), 1, Time{0});
  pit.insertOrAggregate(makeInterest("/p/3", 3, 900), 1, Time{0});
  CHECK(pit.expire(milliseconds(300)).size() == 2);
  CHECK(pit.size() == 1);
}

TEST_CASE("counters balance: created = satisfied + expired + nacked + live")
{
  Pit pit;
  for (uint64_t i = 0; i < 30; ++i) {
    pit.insertOrAggregate(makeInterest("/p/" + std::to_string(i), i, 100), 1, Time{0});
  }
  for (uint64_t i = 0; i < 10; ++i) {
    pit.satisfy(makeData("/p/" + std::to_string(i)), 2, milliseconds(10));
  }
  for (uint64_t i = 10; i < 15; ++i) {
    pit.eraseNacked(Name::fromUri("/p/" + std::to_string(i)));
  }
  pit.expire(milliseconds(100));
  const auto& c = pit.counters();
  CHECK(c.created == 30);
  CHECK(c.created == c.satisfied + c.expired + c.nacked + pit.size());
  CHECK(c.expired == 15);
}

TEST_CASE("insert then satisfy always matches")
{
  for (int i = 0; i < 50; ++i) {
    Pit pit;
    auto uri = "/x/" + std::to_string(i);
    pit.insertOrAggregate(makeInterest(uri, static_cast<uint64_t>(i) * 7 + 1), 1, milliseconds(i));
    CHECK(pit.satisfy(makeData(uri), 2, milliseconds(i + 1)).matched);
  }
}
}

TEST_SUITE("Fib")
{
TEST_CASE("longest prefix match")
{
  Fib fib;
  fib.addNextHop(Name::fromUri("/a"), 1, 1);
  fib.addNextHop(Name::fromUri("/a/b"), 2, 1);
  const FibEntry* e = fib.findLongestPrefixMatch(Name::fromUri("/a/b/1"));
  REQUIRE(e != nullptr);
  CHECK(e->getPrefix() == Name::fromUri("/a/b"));
  CHECK(fib.findLongestPrefixMatch(Name::fromUri("/a/c"))->getPrefix() == Name::fromUri("/a"));
}

TEST_CASE("no matching prefix")
{
  Fib fib;
  fib.addNextHop(Name::fromUri("/a"), 1, 1);
  CHECK(fib.findLongestPrefixMatch(Name::fromUri("/b/1")) == nullptr);
}

TEST_CASE("root entry matches everything")
{
  Fib fib;
  fib.addNextHop(Name::fromUri("/"), 4, 1);
  const FibEntry* e = fib.findLongestPrefixMatch(Name::fromUri("/anything/at/all"));
  REQUIRE(e != nullptr);
  CHECK(e->getPrefix().empty());
}

TEST_CASE("nexthops sorted by cost, ties in insertion order")
{
  FibEntry e(Name::fromUri("/p"));
  e.addOrUpdateNextHop(2, 1);
  e.addOrUpdateNextHop(3, 1);
  e.addOrUpdateNextHop(4, 0);
  e.addOrUpdateNextHop(5, 1);
  std::vector<FaceId> order;
  for (const auto& nh : e.getNextHops()) {
    order.push_back(nh.face);
  }
  CHECK(order == std::vector<FaceId>{4, 2, 3, 5});
  CHECK(e.rankOf(2) == 1);
  CHECK(e.rankOf(9) == -1);
  CHECK(e.hasNextHop(3));
}
}

TEST_SUITE("Cs")
{
TEST_CASE("capacity zero never stores")
{
  Cs cs(0);
  cs.insert(makeData("/a/1"));
  CHECK_FALSE(cs.lookup(Name::fromUri("/a/1")).has_value());
}

TEST_CASE("store then fetch")
{
  Cs cs(10);
  cs.insert(makeData("/a/1"));
  auto hit = cs.lookup(Name::fromUri("/a/1"));
  REQUIRE(hit.has_value());
  CHECK(hit->name == Name::fromUri("/a/1"));
}

TEST_CASE("least recently used entry is evicted")
{
  Cs cs(1);
  cs.insert(makeData("/a/1"));
  cs.insert(makeData("/a/2"));
  CHECK_FALSE(cs.lookup(Name::fromUri("/a/1")).has_value());
  CHECK(cs.lookup(Name::fromUri("/a/2")).has_value());
}
}

TEST_CASE("wire sizes include the fixed header")
{
  CHECK(wireSizeBits(Packet{makeInterest("/p/1", 1)}) == 64 * 8);
  CHECK(wireSizeBits(Packet{makeData("/p/1")}) == (1024 + 64) * 8);
}
