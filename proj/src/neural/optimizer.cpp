/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/neural/optimizer.hpp"

#include <cmath>

namespace dqnaf::neural {

std::string_view
toString(OptimizerKind kind)
{
  switch (kind) {
    case OptimizerKind::RMSPROP:
      return "rmsprop";
    case OptimizerKind::ADAM:
      return "adam";
  }
  return "unknown";
}

Optimizer::Optimizer(OptimizerKind kind, double learningRate, OptimizerHyperparams hp)
  : m_kind(kind)
  , m_lr(learningRate)
  , m_hp(hp)
{
  if (!(learningRate > 0.0)) {
    throw std::invalid_argument("learning rate must be positive");
  }
}

void
Optimizer::step(std::span<double> params, std::span<const double> grads)
{
  if (params.size() != grads.size()) {
    throw ShapeMismatch("gradient size does not match parameter size");
  }
  if (m_first.empty()) {
    m_first.assign(params.size(), 0.0);
    if (m_kind == OptimizerKind::ADAM) {
      m_second.assign(params.size(), 0.0);
    }
  }
  else if (m_first.size() != params.size()) {
    throw ShapeMismatch("optimizer state does not match parameter size");
  }
  ++m_steps;

  if (m_kind == OptimizerKind::RMSPROP) {
    for (size_t i = 0; i < params.size(); ++i) {
      double g = grads[i];
      m_first[i] = m_hp.rmsDecay * m_first[i] + (1 - m_hp.rmsDecay) * g * g;
      params[i] -= m_lr * g / std::sqrt(m_first[i] + m_hp.epsilon);
    }
    return;
  }

  double t = static_cast<double>(m_steps);
  double c1 = 1 - std::pow(m_hp.adamBeta1, t);
  double c2 = 1 - std::pow(m_hp.adamBeta2, t);
  for (size_t i = 0; i < params.size(); ++i) {
    double g = grads[i];
    m_first[i] = m_hp.adamBeta1 * m_first[i] + (1 - m_hp.adamBeta1) * g;
    m_second[i] = m_hp.adamBeta2 * m_second[i] + (1 - m_hp.adamBeta2) * g * g;
    double mHat = m_first[i] / c1;
    double vHat = m_second[i] / c2;
    params[i] -= m_lr * mHat / (std::sqrt(vHat) + m_hp.epsilon);
  }
}

double
trainStep(Mlp& net, Optimizer& opt, std::span<const double> x, size_t action, double target)
{
  double loss = 0.0;
  std::vector<double> grad = net.gradient(x, action, target, &loss);
  opt.step(net.params(), grad);
  return loss;
}

} // namespace dqnaf::neural
