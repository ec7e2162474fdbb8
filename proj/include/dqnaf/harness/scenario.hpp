/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_HARNESS_SCENARIO_HPP
#define DQNAF_HARNESS_SCENARIO_HPP

#include "dqnaf/dqn/agent.hpp"
#include "dqnaf/harness/config-file.hpp"
#include "dqnaf/measurements/face-stats.hpp"
#include "dqnaf/ndn/name.hpp"
#include "dqnaf/strategies/asf.hpp"
#include "dqnaf/strategies/dq-learning.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dqnaf::harness {

constexpr int SCENARIO_SCHEMA_VERSION = 1;

enum class NodeRole {
  CONSUMER,
  ROUTER,
  PRODUCER,
};

enum class WeightMode {
  FRESH,
  PERSIST,
};

enum class EventKind {
  OUTAGE,
  BURST,
};

/// Link directions an event applies to, relative to the link as written (a -> b).
enum class EventDirections {
  BOTH,
  FORWARD,
  REVERSE,
};

struct NodeSpec
{
  std::string name;
  NodeRole role = NodeRole::ROUTER;
};

struct LinkSpec
{
  std::string a;
  std::string b;
  Duration delay = milliseconds(10);
  uint64_t bandwidthBps = 1'000'000;
  size_t queuePackets = 10;
};

struct RouteSpec
{
  std::string node;
  ndn::Name prefix;
  std::string nexthop;
  uint64_t cost = 1;
};

struct ConsumerSpec
{
  std::string node;
  ndn::Name prefix;
  double rate = 100.0;
  Time start{0};
  Time stop{0};
  Duration lifetime = milliseconds(2000);
};

struct ProducerSpec
{
  std::string node;
  ndn::Name prefix;
  uint32_t payloadBytes = 1024;
};

struct EventSpec
{
  EventKind kind = EventKind::OUTAGE;
  /// Each element is a pair of node names joined by a link.
  std::vector<std::pair<std::string, std::string>> links;
  Time from{0};
  Time to{0};
  double rate = 0.0;
  double meanBurst = 10.0;
  EventDirections directions = EventDirections::BOTH;
};

struct StrategySpec
{
  /// best-route | multicast | asf | dq-learning | dqn-af | dqn-af-1 .. dqn-af-6
  std::string name = "best-route";
  /// Router running the strategy under test; its counters feed the interest metrics.
  std::string router;
  /// Strategy of every other router. DQ-Learning is always installed network-wide.
  std::string others = "best-route";
  strategies::AsfConfig asf;
  bool countProbes = true;
  strategies::DqConfig dq;
  dqn::AgentConfig dqn;
};

struct ScenarioConfig
{
  int schema = SCENARIO_SCHEMA_VERSION;
  double durationS = 30.0;
  uint32_t runs = 25;
  uint64_t baseSeed = 1;
  WeightMode weightMode = WeightMode::FRESH;
  std::filesystem::path outputDir = "out";
  size_t csCapacity = 0;
  measurements::MeasurementConfig measurement;

  std::vector<NodeSpec> nodes;
  std::vector<LinkSpec> links;
  std::vector<RouteSpec> routes;
  ConsumerSpec consumer;
  ProducerSpec producer;
  StrategySpec strategy;
  std::vector<EventSpec> events;

  Time
  duration() const
  {
    return seconds(durationS);
  }

  size_t
  durationSeconds() const;

  const NodeSpec*
  findNode(const std::string& name) const;

  const LinkSpec*
  findLink(const std::string& a, const std::string& b) const;
};

ScenarioConfig
loadScenario(const std::filesystem::path& path);

ScenarioConfig
parseScenario(const std::string& text);

/// Checks every invariant of a config; throws ValidationError naming the field.
void
validateScenario(const ScenarioConfig& cfg);

/// The strategy identifiers the harness knows how to build.
bool
isKnownStrategy(const std::string& name);

/// Optimizer and learning rate of the six table variants dqn-af-1 .. dqn-af-6.
struct DqnVariant
{
  int index;
  neural::OptimizerKind optimizer;
  double learningRate;
};

const std::vector<DqnVariant>&
dqnVariants();

/// Copy of cfg with the strategy under test replaced; dqn-af-N also sets optimizer and rate.
ScenarioConfig
withStrategy(const ScenarioConfig& cfg, const std::string& strategy);

std::string
toString(WeightMode mode);

} // namespace dqnaf::harness

#endif // DQNAF_HARNESS_SCENARIO_HPP
