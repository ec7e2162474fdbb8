/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NEURAL_OPTIMIZER_HPP
#define DQNAF_NEURAL_OPTIMIZER_HPP

#include "dqnaf/neural/mlp.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace dqnaf::neural {

enum class OptimizerKind {
  RMSPROP,
  ADAM,
};

std::string_view
toString(OptimizerKind kind);

struct OptimizerHyperparams
{
  double rmsDecay = 0.9;
  double adamBeta1 = 0.9;
  double adamBeta2 = 0.999;
  double epsilon = 1e-7;

  friend bool operator==(const OptimizerHyperparams&, const OptimizerHyperparams&) = default;
};

/**
 * RMSprop:  acc <- d*acc + (1-d)*g^2;  w <- w - lr*g / sqrt(acc + eps)
 * Adam:     bias-corrected first/second moments;  w <- w - lr*m^ / (sqrt(v^) + eps)
 */
class Optimizer
{
public:
  Optimizer(OptimizerKind kind, double learningRate, OptimizerHyperparams hp = {});

  void
  step(std::span<double> params, std::span<const double> grads);

  OptimizerKind
  kind() const
  {
    return m_kind;
  }

  double
  learningRate() const
  {
    return m_lr;
  }

  uint64_t
  stepCount() const
  {
    return m_steps;
  }

  friend bool operator==(const Optimizer&, const Optimizer&) = default;

private:
  OptimizerKind m_kind;
  double m_lr;
  OptimizerHyperparams m_hp;
  std::vector<double> m_first;  // RMSprop accumulator, or Adam m
  std::vector<double> m_second; // Adam v
  uint64_t m_steps = 0;
};

/// One gradient step on the squared error of output `action`; returns the pre-step loss.
double
trainStep(Mlp& net, Optimizer& opt, std::span<const double> x, size_t action, double target);

} // namespace dqnaf::neural

#endif // DQNAF_NEURAL_OPTIMIZER_HPP
