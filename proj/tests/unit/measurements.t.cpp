/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/common/rng.hpp"
#include "dqnaf/measurements/face-stats.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dqnaf;
using namespace dqnaf::measurements;

namespace {

/// Sends one interest and resolves it immediately with the given outcome.
void
outcome(FaceStats& fs, bool delivered, Time now)
{
  fs.recordSent(now);
  if (delivered) {
    fs.recordDelivered(milliseconds(40), now);
  }
  else {
    fs.recordLost(LossCause::TIMEOUT, now);
  }
}

} // namespace

TEST_SUITE("eta")
{
TEST_CASE("counts sends in the last 100 ms")
{
  FaceStats fs;
  fs.recordSent(milliseconds(10));
  fs.recordSent(milliseconds(20));
  fs.recordSent(milliseconds(30));
  CHECK(fs.eta(milliseconds(30)) == 3);
}

TEST_CASE("window is half-open at its far end")
{
  FaceStats fs;
  fs.recordSent(milliseconds(0));
  fs.recordSent(milliseconds(150));
  CHECK(fs.eta(milliseconds(150)) == 1);
  CHECK(fs.eta(milliseconds(250)) == 0);
}

TEST_CASE("no sends")
{
  FaceStats fs;
  CHECK(fs.eta(seconds(3)) == 0);
}

TEST_CASE("matches a brute-force count over the whole send log")
{
  Rng rng(99);
  FaceStats fs;
  std::vector<Time> log;
  Time t{0};
  for (int i = 0; i < 3000; ++i) {
    t += Duration(static_cast<int64_t>(rng.exponential(8e6)));
    if (rng.uniform() < 0.7) {
      fs.recordSent(t);
      log.push_back(t);
    }
    Time q = t + Duration(static_cast<int64_t>(rng.below(50'000'000)));
    size_t brute = static_cast<size_t>(std::count_if(log.begin(), log.end(), [q] (Time s) {
      return s > q - milliseconds(100) && s <= q;
    }));
    REQUIRE(fs.eta(q) == brute);
    t = q;
  }
}
}

TEST_SUITE("omega and delta")
{
TEST_CASE("ratio over a window of ten")
{
  FaceStats fs;
  // spaced 1 s apart, so eta stays at 1 and the floor W = 10 applies
  std::vector<bool> seq = {true, true, false, true, true, true, true, true, true, true};
  Time t{0};
  for (bool d : seq) {
    outcome(fs, d, t);
    t += seconds(1);
  }
  CHECK(fs.windowSize() == 10);
  CHECK(fs.omega() == doctest::Approx(0.9));
}

TEST_CASE("omega is invariant under permutations inside one window")
{
  std::vector<bool> seq = {true, false, false, true, true, false, true, true, true, false};
  FaceStats a;
  FaceStats b;
  auto shuffled = seq;
  std::rotate(shuffled.begin(), shuffled.begin() + 3, shuffled.end());
  Time t{0};
  for (size_t i = 0; i < seq.size(); ++i) {
    outcome(a, seq[i], t);
    outcome(b, shuffled[i], t);
    t += seconds(1);
  }
  CHECK(a.omega() == b.omega());
}

TEST_CASE("old outcomes leave the window")
{
  FaceStats fs;
  Time t{0};
  for (int i = 0; i < 10; ++i) {
    outcome(fs, false, t);
    t += seconds(1);
  }
  for (int i = 0; i < 10; ++i) {
    outcome(fs, true, t);
    t += seconds(1);
  }
  CHECK(fs.omega() == 1.0);
}

TEST_CASE("window grows with the recent send rate")
{
  FaceStats fs;
  // 20 sends within 100 ms, then their outcomes: W = max(eta, 10) = 20
  for (int i = 0; i < 20; ++i) {
    fs.recordSent(milliseconds(i));
  }
  for (int i = 0; i < 20; ++i) {
    if (i < 5) {
      fs.recordLost(LossCause::TIMEOUT, milliseconds(20));
    }
    else {
      fs.recordDelivered(milliseconds(10), milliseconds(20));
    }
  }
  CHECK(fs.windowSize() == 20);
  CHECK(fs.omega() == doctest::Approx(0.75));
}

TEST_CASE("first delivery gives omega one; no outcome also reads one")
{
  FaceStats fs;
  CHECK(fs.omega() == 1.0);
  outcome(fs, true, Time{0});
  CHECK(fs.omega() == 1.0);
}

TEST_CASE("delta: timeout sets zero, next delivery restores one, nack leaves it")
{
  FaceStats fs;
  CHECK(fs.delta() == 1);
  outcome(fs, false, Time{0});
  CHECK(fs.delta() == 0);
  fs.recordSent(seconds(1));
  fs.recordLost(LossCause::NACK, seconds(1));
  CHECK(fs.delta() == 0);
  outcome(fs, true, seconds(2));
  CHECK(fs.delta() == 1);
  fs.recordSent(seconds(3));
  fs.recordLost(LossCause::NACK, seconds(3));
  CHECK(fs.delta() == 1);
}

TEST_CASE("an outcome needs a pending send")
{
  FaceStats fs;
  CHECK_THROWS_AS(fs.recordDelivered(milliseconds(10), Time{0}), FaceStats::UnmatchedOutcome);
  CHECK_THROWS_AS(fs.recordLost(LossCause::TIMEOUT, Time{0}), FaceStats::UnmatchedOutcome);
  fs.recordSent(Time{0});
  fs.recordAbandoned();
  CHECK(fs.pendingCount() == 0);
  CHECK_FALSE(fs.hasOutcomes());
}

TEST_CASE("consecutive losses reset on delivery")
{
  FaceStats fs;
  outcome(fs, false, Time{0});
  outcome(fs, false, seconds(1));
  CHECK(fs.consecutiveLosses() == 2);
  outcome(fs, true, seconds(2));
  CHECK(fs.consecutiveLosses() == 0);
}
}

TEST_SUITE("srtt")
{
TEST_CASE("first sample initializes")
{
  FaceStats fs;
  CHECK_FALSE(fs.srtt().has_value());
  CHECK(fs.lossTimeout() == milliseconds(200));
  fs.updateSrtt(milliseconds(40));
  CHECK(*fs.srtt() == milliseconds(40));
  CHECK(fs.rttvar() == milliseconds(20));
  CHECK(fs.rto() == milliseconds(200));
}

TEST_CASE("smoothing arithmetic")
{
  FaceStats fs;
  fs.setEstimates(milliseconds(100), milliseconds(10));
  fs.updateSrtt(milliseconds(60));
  CHECK(fs.rttvar() == milliseconds(17.5));
  CHECK(*fs.srtt() == milliseconds(95));
  CHECK(fs.rto() == milliseconds(200));
}

TEST_CASE("rto is clamped above")
{
  FaceStats fs;
  fs.updateSrtt(milliseconds(1500));
  CHECK(fs.rto() == milliseconds(2000));
  CHECK(fs.lossTimeout() == milliseconds(2000));
}

TEST_CASE("non-positive sample is rejected")
{
  FaceStats fs;
  CHECK_THROWS_AS(fs.updateSrtt(Duration::zero()), FaceStats::NonPositiveSample);
}

TEST_CASE("srtt stays within the range of the samples")
{
  Rng rng(5);
  FaceStats fs;
  double lo = 1e18;
  double hi = 0;
  for (int i = 0; i < 2000; ++i) {
    auto sample = milliseconds(5 + rng.uniform() * 500);
    lo = std::min(lo, static_cast<double>(sample.count()));
    hi = std::max(hi, static_cast<double>(sample.count()));
    fs.updateSrtt(sample);
    auto s = static_cast<double>(fs.srtt()->count());
    REQUIRE(s >= lo - 1);
    REQUIRE(s <= hi + 1);
  }
}
}

TEST_SUITE("state vector")
{
TEST_CASE("packs omega and delta per face in order")
{
  FaceStatsTable table;
  auto& f2 = table.get(2);
  auto& f3 = table.get(3);
  Time t{0};
  for (int i = 0; i < 10; ++i) {
    outcome(f2, i >= 2, t);
    outcome(f3, i < 3, t);
    t += seconds(1);
  }
  CHECK(f2.omega() == doctest::Approx(0.8));
  CHECK(f3.omega() == doctest::Approx(0.3));
  auto s = table.stateVector({2, 3});
  REQUIRE(s.size() == 4);
  CHECK(s[0] == doctest::Approx(0.8));
  CHECK(s[1] == 1.0);
  CHECK(s[2] == doctest::Approx(0.3));
  CHECK(s[3] == 0.0);
}

TEST_CASE("fresh router is optimistic")
{
  FaceStatsTable table;
  CHECK(table.stateVector({2, 3}) == StateVector{1, 1, 1, 1});
  CHECK(table.stateVector({1, 2, 3}).size() == 6);
}
}
