/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/dqn/agent.hpp"

#include <algorithm>
#include <cmath>

namespace dqnaf::dqn {

void
AgentConfig::validate() const
{
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1)");
  }
  if (!(epsilonMin <= epsilonInit)) {
    throw std::invalid_argument("epsilon_min must not exceed epsilon_init");
  }
  if (rewardCap <= Duration::zero()) {
    throw std::invalid_argument("reward cap must be positive");
  }
  if (memoryCapacity == 0 || replayEvery == 0 || minibatchSize == 0) {
    throw std::invalid_argument("replay parameters must be positive");
  }
  if (!(learningRate > 0.0)) {
    throw std::invalid_argument("learning rate must be positive");
  }
}

double
computeReward(bool delivered, Duration srtt, double omega, const AgentConfig& cfg)
{
  if (!delivered) {
    return cfg.rewardMode == RewardMode::NORMALIZED ? cfg.lossReward : cfg.rawLossReward;
  }
  double cost = toMilliseconds(srtt) / omega;
  if (cfg.rewardMode == RewardMode::RAW) {
    return cost;
  }
  double cap = toMilliseconds(cfg.rewardCap);
  return std::min(cost, cap) / cap;
}

double
tdTarget(double qAtAction, double reward, double gamma)
{
  return (1.0 - gamma) * qAtAction + gamma * reward;
}

size_t
selectAction(const neural::Mlp& net, const std::vector<double>& state, double epsilon,
             const std::vector<size_t>& eligible, Rng& rng, Greedy greedy)
{
  if (eligible.empty()) {
    throw NoEligibleFace();
  }
  double u = rng.uniform();
  if (eligible.size() == 1) {
    return eligible.front();
  }
  if (u <= epsilon) {
    return eligible[rng.below(eligible.size())];
  }

  auto q = net.forward(state);
  size_t best = eligible.front();
  for (size_t a : eligible) {
    bool better = greedy == Greedy::MIN ? q.at(a) < q.at(best) : q.at(a) > q.at(best);
    if (better || (q.at(a) == q.at(best) && a < best)) {
      best = a;
    }
  }
  return best;
}

DqnAgent::DqnAgent(AgentConfig cfg, neural::Mlp net, Rng exploreRng, Rng replayRng)
  : m_cfg(cfg)
  , m_net(std::move(net))
  , m_opt(cfg.optimizer, cfg.learningRate)
  , m_memory(cfg.memoryCapacity)
  , m_exploreRng(std::move(exploreRng))
  , m_replayRng(std::move(replayRng))
{
  m_cfg.validate();
}

double
DqnAgent::epsilon() const
{
  return std::max(m_cfg.epsilonInit - m_cfg.epsilonDecay * static_cast<double>(m_resolved),
                  m_cfg.epsilonMin);
}

PendingAction
DqnAgent::act(const std::vector<double>& state, const std::vector<size_t>& eligible, Time now)
{
  PendingAction pending;
  pending.action = selectAction(m_net, state, epsilon(), eligible, m_exploreRng, m_cfg.greedy);
  pending.qAtAction = m_net.forward(state)[pending.action];
  pending.state = state;
  pending.sentAt = now;
  return pending;
}

void
DqnAgent::resolve(PendingAction& pending, double reward)
{
  if (pending.resolved) {
    throw AlreadyResolved();
  }
  pending.resolved = true;

  double target = tdTarget(pending.qAtAction, reward, m_cfg.gamma);
  neural::trainStep(m_net, m_opt, pending.state, pending.action, target);
  m_memory.push({pending.state, pending.action, reward, pending.qAtAction});
  ++m_resolved;

  if (m_resolved % m_cfg.replayEvery == 0 && m_memory.size() >= m_cfg.minibatchSize) {
    replay();
  }
}

void
DqnAgent::replay()
{
  auto batch = m_memory.sample(m_cfg.minibatchSize, m_replayRng);
  for (const auto& e : batch) {
    double q = m_net.forward(e.state)[e.action];
    neural::trainStep(m_net, m_opt, e.state, e.action, tdTarget(q, e.reward, m_cfg.gamma));
  }
  ++m_replayPasses;
  m_replaySamples += batch.size();
}

} // namespace dqnaf::dqn
