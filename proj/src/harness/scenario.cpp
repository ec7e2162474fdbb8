/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/harness/scenario.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <cmath>
#include <set>

namespace dqnaf::harness {

namespace {

/// Typed access to one table; keys never read are reported as unknown by finish().
class TableReader
{
public:
  TableReader(const ConfigTable& table, std::string fieldPrefix)
    : m_table(table)
    , m_prefix(std::move(fieldPrefix))
  {
  }

  bool
  has(const std::string& key) const
  {
    return m_table.values.contains(key);
  }

  std::string
  field(const std::string& key) const
  {
    return m_prefix.empty() ? key : m_prefix + "." + key;
  }

  std::string
  str(const std::string& key)
  {
    auto it = m_table.values.find(key);
    if (it == m_table.values.end()) {
      throw ValidationError(field(key), "required key is missing");
    }
    m_used.insert(key);
    return it->second.text;
  }

  void
  str(const std::string& key, std::string& out)
  {
    if (has(key)) {
      out = str(key);
    }
  }

  double
  num(const std::string& key)
  {
    std::string text = str(key);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
      throw ParseError(m_table.values.at(key).line, "expected a number for '" + key + "', got '" + text + "'");
    }
    return value;
  }

  template<typename T>
  void
  num(const std::string& key, T& out)
  {
    if (has(key)) {
      double v = num(key);
      if constexpr (std::is_integral_v<T>) {
        if (v < 0 || v != std::floor(v)) {
          throw ValidationError(field(key), "expected a non-negative integer");
        }
      }
      out = static_cast<T>(v);
    }
  }

  void
  ms(const std::string& key, Duration& out)
  {
    if (has(key)) {
      out = milliseconds(num(key));
    }
  }

  void
  sec(const std::string& key, Time& out)
  {
    if (has(key)) {
      out = seconds(num(key));
    }
  }

  void
  flag(const std::string& key, bool& out)
  {
    if (!has(key)) {
      return;
    }
    std::string text = str(key);
    if (text == "true") {
      out = true;
    }
    else if (text == "false") {
      out = false;
    }
    else {
      throw ParseError(m_table.values.at(key).line, "expected true or false for '" + key + "'");
    }
  }

  void
  finish() const
  {
    for (const auto& [key, value] : m_table.values) {
      if (!m_used.contains(key)) {
        throw ValidationError(field(key), "unknown key (line " + std::to_string(value.line) + ")");
      }
    }
  }

private:
  const ConfigTable& m_table;
  std::string m_prefix;
  std::set<std::string> m_used;
};

NodeRole
parseRole(const std::string& text, const std::string& field)
{
  if (text == "consumer") {
    return NodeRole::CONSUMER;
  }
  if (text == "router") {
    return NodeRole::ROUTER;
  }
  if (text == "producer") {
    return NodeRole::PRODUCER;
  }
  throw ValidationError(field, "unknown role '" + text + "'");
}

std::vector<std::pair<std::string, std::string>>
parseLinkList(const std::string& text, const std::string& field)
{
  std::vector<std::pair<std::string, std::string>> links;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t b = item.find_first_not_of(' ');
    size_t e = item.find_last_not_of(' ');
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    size_t dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == item.size()) {
      throw ValidationError(field, "expected node pairs like 'R1-R2', got '" + item + "'");
    }
    links.emplace_back(item.substr(0, dash), item.substr(dash + 1));
    if (comma == std::string::npos) {
      break;
    }
    pos = comma + 1;
  }
  return links;
}

void
readDqn(TableReader& r, dqn::AgentConfig& c)
{
  r.num("gamma", c.gamma);
  r.num("epsilon_init", c.epsilonInit);
  r.num("epsilon_decay", c.epsilonDecay);
  r.num("epsilon_min", c.epsilonMin);
  r.num("memory_size", c.memoryCapacity);
  r.num("replay_every", c.replayEvery);
  r.num("minibatch_size", c.minibatchSize);
  r.num("learning_rate", c.learningRate);
  r.ms("reward_cap_ms", c.rewardCap);
  r.num("loss_reward", c.lossReward);
  r.num("raw_loss_reward", c.rawLossReward);
  r.num("hidden_units", c.hiddenUnits);
  if (r.has("optimizer")) {
    std::string opt = r.str("optimizer");
    if (opt == "rmsprop") {
      c.optimizer = neural::OptimizerKind::RMSPROP;
    }
    else if (opt == "adam") {
      c.optimizer = neural::OptimizerKind::ADAM;
    }
    else {
      throw ValidationError(r.field("optimizer"), "expected rmsprop or adam");
    }
  }
  if (r.has("reward_mode")) {
    std::string mode = r.str("reward_mode");
    if (mode == "normalized") {
      c.rewardMode = dqn::RewardMode::NORMALIZED;
    }
    else if (mode == "raw") {
      c.rewardMode = dqn::RewardMode::RAW;
    }
    else {
      throw ValidationError(r.field("reward_mode"), "expected normalized or raw");
    }
  }
  if (r.has("greedy")) {
    std::string g = r.str("greedy");
    if (g == "min") {
      c.greedy = dqn::Greedy::MIN;
    }
    else if (g == "max") {
      c.greedy = dqn::Greedy::MAX;
    }
    else {
      throw ValidationError(r.field("greedy"), "expected min or max");
    }
  }
}

} // namespace

size_t
ScenarioConfig::durationSeconds() const
{
  return static_cast<size_t>(std::ceil(durationS - 1e-9));
}

const NodeSpec*
ScenarioConfig::findNode(const std::string& name) const
{
  for (const auto& n : nodes) {
    if (n.name == name) {
      return &n;
    }
  }
  return nullptr;
}

const LinkSpec*
ScenarioConfig::findLink(const std::string& a, const std::string& b) const
{
  for (const auto& l : links) {
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a)) {
      return &l;
    }
  }
  return nullptr;
}

std::string
toString(WeightMode mode)
{
  return mode == WeightMode::FRESH ? "fresh" : "persist";
}

const std::vector<DqnVariant>&
dqnVariants()
{
  static const std::vector<DqnVariant> variants = {
    {1, neural::OptimizerKind::RMSPROP, 0.001},
    {2, neural::OptimizerKind::RMSPROP, 0.005},
    {3, neural::OptimizerKind::RMSPROP, 0.01},
    {4, neural::OptimizerKind::ADAM, 0.001},
    {5, neural::OptimizerKind::ADAM, 0.005},
    {6, neural::OptimizerKind::ADAM, 0.01},
  };
  return variants;
}

bool
isKnownStrategy(const std::string& name)
{
  static const std::set<std::string> base = {"best-route", "multicast", "asf", "dq-learning", "dqn-af"};
  if (base.contains(name)) {
    return true;
  }
  for (const auto& v : dqnVariants()) {
    if (name == "dqn-af-" + std::to_string(v.index)) {
      return true;
    }
  }
  return false;
}

ScenarioConfig
withStrategy(const ScenarioConfig& cfg, const std::string& strategy)
{
  if (!isKnownStrategy(strategy)) {
    throw ValidationError("strategy.name", "unknown strategy '" + strategy + "'");
  }
  ScenarioConfig out = cfg;
  out.strategy.name = strategy;
  for (const auto& v : dqnVariants()) {
    if (strategy == "dqn-af-" + std::to_string(v.index)) {
      out.strategy.dqn.optimizer = v.optimizer;
      out.strategy.dqn.learningRate = v.learningRate;
    }
  }
  return out;
}

ScenarioConfig
parseScenario(const std::string& text)
{
  ScenarioConfig cfg;
  std::set<std::string> seenTables;
  std::map<std::string, size_t> arrayCounts;

  for (const auto& table : parseConfigText(text)) {
    size_t index = table.isArrayElement ? arrayCounts[table.name]++ : 0;
    std::string prefix = table.isArrayElement ? table.name + "[" + std::to_string(index) + "]"
                                              : table.name;
    TableReader r(table, prefix);

    if (table.name.empty()) {
      if (!r.has("schema")) {
        throw ValidationError("schema", "required key is missing");
      }
      r.num("schema", cfg.schema);
    }
    else if (table.name == "simulation" && !table.isArrayElement) {
      r.num("duration_s", cfg.durationS);
      r.num("runs", cfg.runs);
      r.num("base_seed", cfg.baseSeed);
      r.num("cs_capacity", cfg.csCapacity);
      if (r.has("output_dir")) {
        cfg.outputDir = r.str("output_dir");
      }
      if (r.has("weight_mode")) {
        std::string mode = r.str("weight_mode");
        if (mode == "fresh") {
          cfg.weightMode = WeightMode::FRESH;
        }
        else if (mode == "persist") {
          cfg.weightMode = WeightMode::PERSIST;
        }
        else {
          throw ValidationError("simulation.weight_mode", "expected fresh or persist");
        }
      }
    }
    else if (table.name == "measurements" && !table.isArrayElement) {
      auto& m = cfg.measurement;
      r.ms("eta_interval_ms", m.etaInterval);
      r.num("min_window", m.minWindow);
      r.ms("rto_min_ms", m.rtoMin);
      r.ms("rto_max_ms", m.rtoMax);
      r.ms("rto_unmeasured_ms", m.rtoUnmeasured);
    }
    else if (table.name == "node" && table.isArrayElement) {
      NodeSpec n;
      n.name = r.str("name");
      n.role = parseRole(r.str("role"), r.field("role"));
      cfg.nodes.push_back(n);
    }
    else if (table.name == "link" && table.isArrayElement) {
      LinkSpec l;
      l.a = r.str("a");
      l.b = r.str("b");
      r.ms("delay_ms", l.delay);
      r.num("bandwidth_bps", l.bandwidthBps);
      r.num("queue_packets", l.queuePackets);
      cfg.links.push_back(l);
    }
    else if (table.name == "route" && table.isArrayElement) {
      RouteSpec rt;
      rt.node = r.str("node");
      rt.prefix = ndn::Name::fromUri(r.str("prefix"));
      rt.nexthop = r.str("nexthop");
      r.num("cost", rt.cost);
      cfg.routes.push_back(rt);
    }
    else if (table.name == "consumer" && !table.isArrayElement) {
      auto& c = cfg.consumer;
      c.node = r.str("node");
      c.prefix = ndn::Name::fromUri(r.str("prefix"));
      c.rate = r.num("rate");
      r.sec("start_s", c.start);
      if (r.has("stop_s")) {
        r.sec("stop_s", c.stop);
      }
      else {
        c.stop = Time(-1);
      }
      r.ms("lifetime_ms", c.lifetime);
    }
    else if (table.name == "producer" && !table.isArrayElement) {
      auto& p = cfg.producer;
      p.node = r.str("node");
      p.prefix = ndn::Name::fromUri(r.str("prefix"));
      r.num("payload_bytes", p.payloadBytes);
    }
    else if (table.name == "strategy" && !table.isArrayElement) {
      r.str("name", cfg.strategy.name);
      r.str("router", cfg.strategy.router);
      r.str("others", cfg.strategy.others);
    }
    else if (table.name == "asf" && !table.isArrayElement) {
      r.ms("probe_interval_ms", cfg.strategy.asf.probeInterval);
      r.flag("count_probes", cfg.strategy.countProbes);
    }
    else if (table.name == "dq" && !table.isArrayElement) {
      auto& d = cfg.strategy.dq;
      r.num("alpha", d.alpha);
      r.num("gamma", d.gamma);
      r.num("loss_penalty_ms", d.lossPenaltyMs);
      r.num("q_floor_ms", d.qFloorMs);
      r.num("suppression_losses", d.suppressionLosses);
      r.ms("suppression_span_ms", d.suppressionSpan);
      r.num("initial_q", d.initialQ);
    }
    else if (table.name == "dqn" && !table.isArrayElement) {
      readDqn(r, cfg.strategy.dqn);
    }
    else if (table.name == "event" && table.isArrayElement) {
      EventSpec ev;
      std::string kind = r.str("kind");
      if (kind == "outage") {
        ev.kind = EventKind::OUTAGE;
      }
      else if (kind == "burst") {
        ev.kind = EventKind::BURST;
        ev.rate = r.num("rate");
        r.num("mean_burst", ev.meanBurst);
      }
      else {
        throw ValidationError(r.field("kind"), "expected outage or burst");
      }
      ev.links = parseLinkList(r.str("links"), r.field("links"));
      ev.from = seconds(r.num("from_s"));
      ev.to = seconds(r.num("to_s"));
      if (r.has("directions")) {
        std::string d = r.str("directions");
        if (d == "both") {
          ev.directions = EventDirections::BOTH;
        }
        else if (d == "forward") {
          ev.directions = EventDirections::FORWARD;
        }
        else if (d == "reverse") {
          ev.directions = EventDirections::REVERSE;
        }
        else {
          throw ValidationError(r.field("directions"), "expected both, forward or reverse");
        }
      }
      cfg.events.push_back(ev);
    }
    else {
      throw ParseError(table.line, "unknown table [" + table.name + "]");
    }
    r.finish();
  }

  if (cfg.consumer.stop < Time::zero()) {
    cfg.consumer.stop = cfg.duration();
  }
  validateScenario(cfg);
  return cfg;
}

ScenarioConfig
loadScenario(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) {
    throw MissingFile("cannot read scenario file " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parseScenario(buf.str());
}

void
validateScenario(const ScenarioConfig& cfg)
{
  if (cfg.schema != SCENARIO_SCHEMA_VERSION) {
    throw ValidationError("schema", "unsupported schema version " + std::to_string(cfg.schema));
  }
  if (!(cfg.durationS > 0)) {
    throw ValidationError("simulation.duration_s", "must be positive");
  }
  if (cfg.runs == 0) {
    throw ValidationError("simulation.runs", "must be at least 1");
  }

  std::set<std::string> names;
  for (size_t i = 0; i < cfg.nodes.size(); ++i) {
    if (!names.insert(cfg.nodes[i].name).second) {
      throw ValidationError("node[" + std::to_string(i) + "].name", "duplicate node name");
    }
  }
  auto requireNode = [&] (const std::string& name, const std::string& field) -> const NodeSpec& {
    const NodeSpec* n = cfg.findNode(name);
    if (n == nullptr) {
      throw ValidationError(field, "unknown node '" + name + "'");
    }
    return *n;
  };

  for (size_t i = 0; i < cfg.links.size(); ++i) {
    const auto& l = cfg.links[i];
    std::string f = "link[" + std::to_string(i) + "]";
    requireNode(l.a, f + ".a");
    requireNode(l.b, f + ".b");
    if (l.a == l.b) {
      throw ValidationError(f, "link endpoints must differ");
    }
    if (l.bandwidthBps == 0) {
      throw ValidationError(f + ".bandwidth_bps", "must be positive");
    }
    if (l.delay < Duration::zero()) {
      throw ValidationError(f + ".delay_ms", "must be non-negative");
    }
    if (cfg.findLink(l.a, l.b) != &l) {
      throw ValidationError(f, "duplicate link");
    }
  }

  for (size_t i = 0; i < cfg.routes.size(); ++i) {
    const auto& rt = cfg.routes[i];
    std::string f = "route[" + std::to_string(i) + "]";
    if (requireNode(rt.node, f + ".node").role != NodeRole::ROUTER) {
      throw ValidationError(f + ".node", "routes can only be installed on routers");
    }
    requireNode(rt.nexthop, f + ".nexthop");
    if (cfg.findLink(rt.node, rt.nexthop) == nullptr) {
      throw ValidationError(f + ".nexthop", "no link between " + rt.node + " and " + rt.nexthop);
    }
  }

  if (requireNode(cfg.consumer.node, "consumer.node").role != NodeRole::CONSUMER) {
    throw ValidationError("consumer.node", "node is not a consumer");
  }
  if (!(cfg.consumer.rate > 0)) {
    throw ValidationError("consumer.rate", "must be positive");
  }
  if (cfg.consumer.lifetime <= Duration::zero()) {
    throw ValidationError("consumer.lifetime_ms", "must be positive");
  }
  if (cfg.consumer.start < Time::zero() || cfg.consumer.stop < cfg.consumer.start ||
      cfg.consumer.stop > cfg.duration()) {
    throw ValidationError("consumer.start_s", "need 0 <= start <= stop <= duration");
  }
  if (requireNode(cfg.producer.node, "producer.node").role != NodeRole::PRODUCER) {
    throw ValidationError("producer.node", "node is not a producer");
  }

  if (!isKnownStrategy(cfg.strategy.name)) {
    throw ValidationError("strategy.name", "unknown strategy '" + cfg.strategy.name + "'");
  }
  if (!isKnownStrategy(cfg.strategy.others) || cfg.strategy.others.starts_with("dqn-af")) {
    throw ValidationError("strategy.others", "must be best-route, multicast, asf or dq-learning");
  }
  if (requireNode(cfg.strategy.router, "strategy.router").role != NodeRole::ROUTER) {
    throw ValidationError("strategy.router", "node is not a router");
  }
  if (cfg.strategy.asf.probeInterval <= Duration::zero()) {
    throw ValidationError("asf.probe_interval_ms", "must be positive");
  }
  try {
    cfg.strategy.dqn.validate();
  }
  catch (const std::invalid_argument& e) {
    throw ValidationError("dqn", e.what());
  }
  const auto& dq = cfg.strategy.dq;
  if (!(dq.alpha > 0 && dq.alpha <= 1) || !(dq.gamma >= 0 && dq.gamma <= 1) || dq.qFloorMs <= 0 ||
      dq.lossPenaltyMs < 0 || dq.initialQ < 0) {
    throw ValidationError("dq", "alpha in (0,1], gamma in [0,1], q_floor > 0, penalty/initial q >= 0");
  }

  for (size_t i = 0; i < cfg.events.size(); ++i) {
    const auto& ev = cfg.events[i];
    std::string f = "events[" + std::to_string(i) + "]";
    if (ev.from < Time::zero() || ev.to > cfg.duration() || ev.from >= ev.to) {
      throw ValidationError(f, "window must satisfy 0 <= from < to <= duration");
    }
    for (const auto& [a, b] : ev.links) {
      if (cfg.findLink(a, b) == nullptr) {
        throw ValidationError(f, "no link " + a + "-" + b);
      }
    }
    if (ev.kind == EventKind::BURST && (!(ev.rate >= 0 && ev.rate <= 1) || !(ev.meanBurst >= 1))) {
      throw ValidationError(f, "burst needs rate in [0,1] and mean_burst >= 1");
    }
  }
}

} // namespace dqnaf::harness
