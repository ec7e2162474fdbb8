/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/harness/network.hpp"

#include "dqnaf/strategies/asf.hpp"
#include "dqnaf/strategies/best-route.hpp"
#include "dqnaf/strategies/dq-learning.hpp"
#include "dqnaf/strategies/multicast.hpp"

#include <numeric>

namespace dqnaf::harness {

namespace {

double
seriesMean(const std::vector<uint64_t>& s)
{
  if (s.empty()) {
    return 0.0;
  }
  return static_cast<double>(std::accumulate(s.begin(), s.end(), uint64_t{0})) /
         static_cast<double>(s.size());
}

} // namespace

double
RunMetrics::meanDataRx() const
{
  return seriesMean(dataRx);
}

double
RunMetrics::meanInterestsTx() const
{
  return seriesMean(interestsTx);
}

double
RunMetrics::meanInterestsTxFace(size_t rank) const
{
  return rank < interestsTxPerFace.size() ? seriesMean(interestsTxPerFace[rank]) : 0.0;
}

Network::Network(const ScenarioConfig& cfg, uint32_t runIndex, std::optional<neural::Mlp> initialNet)
  : m_cfg(cfg)
  , m_run(runIndex)
{
  const size_t bins = cfg.durationSeconds();
  const bool dqEverywhere = cfg.strategy.name == "dq-learning" || cfg.strategy.others == "dq-learning";

  NodeId nextId = 1;
  for (const auto& spec : cfg.nodes) {
    std::unique_ptr<Node> node;
    switch (spec.role) {
      case NodeRole::ROUTER:
        node = std::make_unique<Router>(nextId, spec.name, m_scheduler, cfg.measurement, cfg.csCapacity);
        break;
      case NodeRole::CONSUMER: {
        ConsumerApp::Params p;
        p.prefix = cfg.consumer.prefix;
        p.rate = cfg.consumer.rate;
        p.start = cfg.consumer.start;
        p.stop = cfg.consumer.stop;
        p.lifetime = cfg.consumer.lifetime;
        auto app = std::make_unique<ConsumerApp>(nextId, spec.name, m_scheduler, p,
                                                 Rng::stream(cfg.baseSeed, runIndex, "traffic"), bins);
        if (spec.name == cfg.consumer.node) {
          m_consumer = app.get();
        }
        node = std::move(app);
        break;
      }
      case NodeRole::PRODUCER: {
        auto app = std::make_unique<ProducerApp>(nextId, spec.name, m_scheduler, cfg.producer.prefix,
                                                 cfg.producer.payloadBytes, dqEverywhere);
        if (spec.name == cfg.producer.node) {
          m_producer = app.get();
        }
        node = std::move(app);
        break;
      }
    }
    ++nextId;
    m_nodes.emplace(spec.name, std::move(node));
  }

  for (const auto& spec : cfg.links) {
    auto& link = *m_links.emplace_back(std::make_unique<sim::Link>(
      sim::LinkParams{spec.delay, spec.bandwidthBps, spec.queuePackets}));
    Node& a = *m_nodes.at(spec.a);
    Node& b = *m_nodes.at(spec.b);
    auto& ab = *m_transports.emplace_back(std::make_unique<LinkTransport>(link, sim::Direction::A_TO_B, m_scheduler));
    auto& ba = *m_transports.emplace_back(std::make_unique<LinkTransport>(link, sim::Direction::B_TO_A, m_scheduler));
    FaceId fa = a.addFace(&ab);
    FaceId fb = b.addFace(&ba);
    ab.connect(b, fb);
    ba.connect(a, fa);
    m_faceTowards[{spec.a, spec.b}] = fa;
    m_faceTowards[{spec.b, spec.a}] = fb;
  }

  for (const auto& rt : cfg.routes) {
    router(rt.node).fib().addNextHop(rt.prefix, faceTowards(rt.node, rt.nexthop), rt.cost);
  }

  m_measured = &router(cfg.strategy.router);
  if (const auto* entry = m_measured->fib().findLongestPrefixMatch(cfg.producer.prefix)) {
    for (const auto& nh : entry->getNextHops()) {
      m_measuredFaces.push_back(nh.face);
    }
  }

  for (auto& [name, node] : m_nodes) {
    auto* r = dynamic_cast<Router*>(node.get());
    if (r == nullptr) {
      continue;
    }
    std::string strategyName = cfg.strategy.others;
    if (name == cfg.strategy.router || cfg.strategy.name == "dq-learning") {
      strategyName = cfg.strategy.name;
    }
    r->setStrategy(makeStrategy(strategyName, name, initialNet));
    r->start(Time::zero(), cfg.duration(), cfg.producer.prefix);
  }

  m_interestsTx.assign(bins, 0);
  m_interestsTxPerFace.assign(m_measuredFaces.size(), std::vector<uint64_t>(bins, 0));
  m_measured->setSendObserver([this] (FaceId face, Time when, bool isProbe) {
    if (isProbe) {
      ++m_probes;
      if (!m_cfg.strategy.countProbes) {
        return;
      }
    }
    auto bin = static_cast<size_t>(when.count() / 1'000'000'000);
    if (bin >= m_interestsTx.size()) {
      return;
    }
    ++m_interestsTx[bin];
    for (size_t rank = 0; rank < m_measuredFaces.size(); ++rank) {
      if (m_measuredFaces[rank] == face) {
        ++m_interestsTxPerFace[rank][bin];
      }
    }
  });

  for (size_t i = 0; i < cfg.events.size(); ++i) {
    installEvent(cfg.events[i], i);
  }

  m_consumer->start();
}

std::unique_ptr<strategies::Strategy>
Network::makeStrategy(const std::string& name, const std::string& routerName,
                      std::optional<neural::Mlp>& initialNet)
{
  const auto& s = m_cfg.strategy;
  if (name == "best-route") {
    return std::make_unique<strategies::BestRouteStrategy>();
  }
  if (name == "multicast") {
    return std::make_unique<strategies::MulticastStrategy>();
  }
  if (name == "asf") {
    return std::make_unique<strategies::AsfStrategy>(s.asf);
  }
  if (name == "dq-learning") {
    return std::make_unique<strategies::DqLearningStrategy>(
      s.dq, Rng::stream(m_cfg.baseSeed, m_run, "dq." + routerName));
  }

  // DQN-AF: only the router under test can run it (validation rejects it for others)
  Router& r = router(routerName);
  std::vector<FaceId> order;
  if (const auto* entry = r.fib().findLongestPrefixMatch(m_cfg.producer.prefix)) {
    for (const auto& nh : entry->getNextHops()) {
      order.push_back(nh.face);
    }
  }
  if (order.empty()) {
    throw ValidationError("strategy.router", "DQN-AF router has no route to the producer prefix");
  }

  neural::Mlp net(order.size(), s.dqn.hiddenUnits);
  if (initialNet) {
    if (initialNet->faceCount() != order.size()) {
      throw ValidationError("strategy.router", "initial network face count does not match the FIB");
    }
    net = std::move(*initialNet);
    initialNet.reset();
  }
  else {
    Rng init = Rng::stream(m_cfg.baseSeed, m_run, "net.init");
    net = neural::Mlp::glorot(order.size(), init, s.dqn.hiddenUnits);
  }

  auto strategy = std::make_unique<dqn::DqnAfStrategy>(
    name, s.dqn, order, std::move(net),
    Rng::stream(m_cfg.baseSeed, m_run, "agent.explore"),
    Rng::stream(m_cfg.baseSeed, m_run, "agent.replay"));
  m_dqn = strategy.get();
  return strategy;
}

void
Network::installEvent(const EventSpec& ev, size_t index)
{
  for (const auto& [x, y] : ev.links) {
    const LinkSpec* spec = m_cfg.findLink(x, y);
    sim::Link& l = link(x, y);
    // the event names the link as x-y; FORWARD means x -> y
    sim::Direction forward = spec->a == x ? sim::Direction::A_TO_B : sim::Direction::B_TO_A;
    sim::Direction reverse = forward == sim::Direction::A_TO_B ? sim::Direction::B_TO_A
                                                               : sim::Direction::A_TO_B;
    std::vector<std::pair<sim::Direction, std::string>> dirs;
    if (ev.directions != EventDirections::REVERSE) {
      dirs.emplace_back(forward, x + ">" + y);
    }
    if (ev.directions != EventDirections::FORWARD) {
      dirs.emplace_back(reverse, y + ">" + x);
    }

    for (const auto& [dir, label] : dirs) {
      if (ev.kind == EventKind::OUTAGE) {
        l.applyOutage(dir, ev.from, ev.to);
      }
      else {
        std::string purpose = "loss." + label + "." + std::to_string(index);
        l.addBurstPeriod(dir, ev.from, ev.to, sim::BurstLossModel(ev.rate, ev.meanBurst),
                         Rng::stream(m_cfg.baseSeed, m_run, purpose));
      }
    }
  }
}

void
Network::run()
{
  m_scheduler.runUntil(m_cfg.duration());
}

void
Network::runUntil(Time t)
{
  m_scheduler.runUntil(t);
}

RunMetrics
Network::metrics() const
{
  RunMetrics m;
  m.strategy = m_cfg.strategy.name;
  m.run = m_run;
  m.seed = m_cfg.baseSeed;
  m.dataRx = m_consumer->dataPerSecond();
  m.interestsTx = m_interestsTx;
  m.interestsTxPerFace = m_interestsTxPerFace;
  m.consumerInterests = m_consumer->interestsSent();
  m.probesSent = m_probes;
  return m;
}

Router&
Network::router(const std::string& name)
{
  auto* r = dynamic_cast<Router*>(m_nodes.at(name).get());
  if (r == nullptr) {
    throw std::invalid_argument("node " + name + " is not a router");
  }
  return *r;
}

sim::Link&
Network::link(const std::string& a, const std::string& b)
{
  const LinkSpec* spec = m_cfg.findLink(a, b);
  if (spec == nullptr) {
    throw std::invalid_argument("no link " + a + "-" + b);
  }
  return *m_links.at(static_cast<size_t>(spec - m_cfg.links.data()));
}

FaceId
Network::faceTowards(const std::string& node, const std::string& neighbor) const
{
  auto it = m_faceTowards.find({node, neighbor});
  if (it == m_faceTowards.end()) {
    throw std::invalid_argument("no face from " + node + " to " + neighbor);
  }
  return it->second;
}

} // namespace dqnaf::harness
