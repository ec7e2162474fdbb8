/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_DQN_AGENT_HPP
#define DQNAF_DQN_AGENT_HPP

#include "dqnaf/common/rng.hpp"
#include "dqnaf/common/time.hpp"
#include "dqnaf/neural/mlp.hpp"
#include "dqnaf/neural/optimizer.hpp"
#include "dqnaf/neural/replay-memory.hpp"

#include <stdexcept>
#include <vector>

namespace dqnaf::dqn {

enum class RewardMode {
  NORMALIZED,
  RAW,
};

/// Which network output counts as the best action.
enum class Greedy {
  MIN, ///< outputs are predicted costs
  MAX,
};

struct AgentConfig
{
  double gamma = 0.95;
  double epsilonInit = 1.0;
  double epsilonDecay = 0.005;
  double epsilonMin = 0.01;
  size_t memoryCapacity = 2000; // kappa
  uint64_t replayEvery = 100;   // rho
  size_t minibatchSize = 32;    // psi
  neural::OptimizerKind optimizer = neural::OptimizerKind::RMSPROP;
  double learningRate = 0.005;
  Duration rewardCap = milliseconds(1000);
  double lossReward = 1.0;
  /// Loss reward in RAW mode; defaults to 10 * rewardCap in milliseconds.
  double rawLossReward = 10000.0;
  RewardMode rewardMode = RewardMode::NORMALIZED;
  Greedy greedy = Greedy::MIN;
  size_t hiddenUnits = neural::Mlp::DEFAULT_HIDDEN;

  void
  validate() const;
};

class NoEligibleFace : public std::invalid_argument
{
public:
  NoEligibleFace()
    : std::invalid_argument("no eligible face for action selection")
  {
  }
};

class AlreadyResolved : public std::logic_error
{
public:
  AlreadyResolved()
    : std::logic_error("pending action already resolved")
  {
  }
};

/// Delivery cost: min(srtt/omega, cap)/cap when normalized, srtt/omega (ms) when raw.
double
computeReward(bool delivered, Duration srtt, double omega, const AgentConfig& cfg);

/// (1 - gamma) * q + gamma * r
double
tdTarget(double qAtAction, double reward, double gamma);

/**
 * Epsilon-greedy over the network outputs, restricted to `eligible` (indices into the
 * output vector). A draw u in [0,1) with u <= epsilon explores uniformly; otherwise the
 * greedy output wins, lowest index on ties.
 */
size_t
selectAction(const neural::Mlp& net, const std::vector<double>& state, double epsilon,
             const std::vector<size_t>& eligible, Rng& rng, Greedy greedy = Greedy::MIN);

struct PendingAction
{
  std::vector<double> state;
  size_t action = 0;
  double qAtAction = 0.0;
  Time sentAt{0};
  bool resolved = false;
};

/**
 * Network, optimizer, and replay memory of one learner.
 *
 * Each resolved action trains once on its own target, then goes to replay. After
 * every `replayEvery` resolutions a minibatch is drawn and each sample is retrained
 * with its stored reward against the current network's q.
 */
class DqnAgent
{
public:
  DqnAgent(AgentConfig cfg, neural::Mlp net, Rng exploreRng, Rng replayRng);

  /// Chooses an action and snapshots what resolve() needs.
  PendingAction
  act(const std::vector<double>& state, const std::vector<size_t>& eligible, Time now);

  /// Trains on the outcome; throws AlreadyResolved on a second call for the same action.
  void
  resolve(PendingAction& pending, double reward);

  double
  epsilon() const;

  uint64_t
  resolvedCount() const
  {
    return m_resolved;
  }

  uint64_t
  replayPasses() const
  {
    return m_replayPasses;
  }

  uint64_t
  replaySamplesTrained() const
  {
    return m_replaySamples;
  }

  const neural::Mlp&
  network() const
  {
    return m_net;
  }

  const neural::ReplayMemory&
  memory() const
  {
    return m_memory;
  }

  const AgentConfig&
  config() const
  {
    return m_cfg;
  }

private:
  void
  replay();

private:
  AgentConfig m_cfg;
  neural::Mlp m_net;
  neural::Optimizer m_opt;
  neural::ReplayMemory m_memory;
  Rng m_exploreRng;
  Rng m_replayRng;
  uint64_t m_resolved = 0;
  uint64_t m_replayPasses = 0;
  uint64_t m_replaySamples = 0;
};

} // namespace dqnaf::dqn

#endif // DQNAF_DQN_AGENT_HPP
