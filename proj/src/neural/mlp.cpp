/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#include "dqnaf/neural/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dqnaf::neural {

namespace {

std::vector<LayerShape>
standardShapes(size_t faceCount, size_t hidden)
{
  if (faceCount == 0 || hidden == 0) {
    throw ShapeMismatch("network needs at least one face and one hidden unit");
  }
  return {{2 * faceCount, hidden}, {hidden, hidden}, {hidden, faceCount}};
}

size_t
totalParams(const std::vector<LayerShape>& shapes)
{
  return std::accumulate(shapes.begin(), shapes.end(), size_t{0},
                         [] (size_t n, const LayerShape& s) { return n + s.paramCount(); });
}

} // namespace

std::vector<double>
softmax(std::span<const double> logits)
{
  double maxLogit = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - maxLogit);
    sum += out[i];
  }
  for (double& v : out) {
    v /= sum;
  }
  return out;
}

Mlp::Mlp(size_t faceCount, size_t hidden)
  : m_shapes(standardShapes(faceCount, hidden))
  , m_params(totalParams(m_shapes), 0.0)
{
}

Mlp::Mlp(std::vector<LayerShape> shapes, std::vector<double> params)
  : m_shapes(std::move(shapes))
  , m_params(std::move(params))
{
  if (m_shapes.empty()) {
    throw ShapeMismatch("network has no layers");
  }
  for (size_t i = 1; i < m_shapes.size(); ++i) {
    if (m_shapes[i].in != m_shapes[i - 1].out) {
      throw ShapeMismatch("layer " + std::to_string(i) + " input does not match previous output");
    }
  }
  if (m_params.size() != totalParams(m_shapes)) {
    throw ShapeMismatch("parameter count does not match layer shapes");
  }
}

Mlp
Mlp::glorot(size_t faceCount, Rng& rng, size_t hidden)
{
  Mlp net(faceCount, hidden);
  size_t offset = 0;
  for (const auto& shape : net.m_shapes) {
    double limit = std::sqrt(6.0 / static_cast<double>(shape.in + shape.out));
    for (size_t i = 0; i < shape.in * shape.out; ++i) {
      net.m_params[offset + i] = rng.uniform(-limit, limit);
    }
    offset += shape.paramCount(); // biases stay zero
  }
  return net;
}

void
Mlp::checkInput(std::span<const double> x) const
{
  if (x.size() != inputSize()) {
    throw ShapeMismatch("input has " + std::to_string(x.size()) + " elements, network expects " +
                        std::to_string(inputSize()));
  }
}

Mlp::Activations
Mlp::run(std::span<const double> x) const
{
  checkInput(x);
  Activations act;
  act.layerOutputs.emplace_back(x.begin(), x.end());

  size_t offset = 0;
  for (size_t l = 0; l < m_shapes.size(); ++l) {
    const auto& shape = m_shapes[l];
    const double* w = m_params.data() + offset;
    const double* b = w + shape.in * shape.out;
    const auto& input = act.layerOutputs.back();

    std::vector<double> z(shape.out);
    for (size_t o = 0; o < shape.out; ++o) {
      double sum = b[o];
      for (size_t i = 0; i < shape.in; ++i) {
        sum += w[o * shape.in + i] * input[i];
      }
      z[o] = sum;
    }
    offset += shape.paramCount();

    if (l + 1 == m_shapes.size()) {
      act.logits = std::move(z);
    }
    else {
      for (double& v : z) {
        v = std::max(v, 0.0);
      }
      act.layerOutputs.push_back(std::move(z));
    }
  }
  return act;
}

std::vector<double>
Mlp::forward(std::span<const double> x) const
{
  return softmax(run(x).logits);
}

double
Mlp::loss(std::span<const double> x, size_t action, double target) const
{
  if (action >= faceCount()) {
    throw ShapeMismatch("action index out of range");
  }
  double diff = forward(x)[action] - target;
  return diff * diff;
}

std::vector<double>
Mlp::gradient(std::span<const double> x, size_t action, double target, double* lossOut) const
{
  if (action >= faceCount()) {
    throw ShapeMismatch("action index out of range");
  }
  if (!std::isfinite(target)) {
    throw NonFiniteTarget("training target is not finite");
  }

  Activations act = run(x);
  std::vector<double> y = softmax(act.logits);
  double diff = y[action] - target;
  if (lossOut != nullptr) {
    *lossOut = diff * diff;
  }

  // dL/dz_j = 2 (y_a - t) * y_a * (1[j == a] - y_j)
  std::vector<double> delta(y.size());
  for (size_t j = 0; j < y.size(); ++j) {
    delta[j] = 2.0 * diff * y[action] * ((j == action ? 1.0 : 0.0) - y[j]);
  }

  std::vector<double> grad(m_params.size(), 0.0);
  std::vector<size_t> offsets(m_shapes.size());
  for (size_t l = 1; l < m_shapes.size(); ++l) {
    offsets[l] = offsets[l - 1] + m_shapes[l - 1].paramCount();
  }

  for (size_t l = m_shapes.size(); l-- > 0;) {
    const auto& shape = m_shapes[l];
    const auto& input = act.layerOutputs[l];
    const double* w = m_params.data() + offsets[l];
    double* gw = grad.data() + offsets[l];
    double* gb = gw + shape.in * shape.out;

    for (size_t o = 0; o < shape.out; ++o) {
      for (size_t i = 0; i < shape.in; ++i) {
        gw[o * shape.in + i] = delta[o] * input[i];
      }
      gb[o] = delta[o];
    }
    if (l == 0) {
      break;
    }

    // propagate to the previous layer's pre-activation through ReLU
    std::vector<double> prev(shape.in, 0.0);
    for (size_t i = 0; i < shape.in; ++i) {
      if (input[i] <= 0.0) {
        continue;
      }
      double sum = 0.0;
      for (size_t o = 0; o < shape.out; ++o) {
        sum += w[o * shape.in + i] * delta[o];
      }
      prev[i] = sum;
    }
    delta = std::move(prev);
  }
  return grad;
}

} // namespace dqnaf::neural
