/* -*- Mode:C++; c-file-style:"gnu"; indent-tabs-mode:nil; -*- */

#ifndef DQNAF_NEURAL_MLP_HPP
#define DQNAF_NEURAL_MLP_HPP

#include "dqnaf/common/rng.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace dqnaf::neural {

class ShapeMismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class NonFiniteTarget : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

struct LayerShape
{
  size_t in = 0;
  size_t out = 0;

  size_t
  paramCount() const
  {
    return in * out + out;
  }

  friend bool operator==(const LayerShape&, const LayerShape&) = default;
};

/**
 * Fully connected network 2F -> hidden -> hidden -> F with ReLU hidden units and a
 * softmax head; output i is the q-value of face i.
 *
 * Parameters live in one flat vector, layer by layer, each layer stored as its
 * row-major (out x in) weight matrix followed by its bias vector.
 */
class Mlp
{
public:
  static constexpr size_t DEFAULT_HIDDEN = 24;

  /// All-zero parameters.
  explicit
  Mlp(size_t faceCount, size_t hidden = DEFAULT_HIDDEN);

  Mlp(std::vector<LayerShape> shapes, std::vector<double> params);

  /// Glorot-uniform weights, zero biases.
  static Mlp
  glorot(size_t faceCount, Rng& rng, size_t hidden = DEFAULT_HIDDEN);

  std::vector<double>
  forward(std::span<const double> x) const;

  /// Squared error of output `action` against `target`.
  double
  loss(std::span<const double> x, size_t action, double target) const;

  /// Gradient of loss() with respect to every parameter, through the full softmax Jacobian.
  std::vector<double>
  gradient(std::span<const double> x, size_t action, double target, double* lossOut = nullptr) const;

  size_t
  faceCount() const
  {
    return m_shapes.back().out;
  }

  size_t
  inputSize() const
  {
    return m_shapes.front().in;
  }

  const std::vector<LayerShape>&
  shapes() const
  {
    return m_shapes;
  }

  std::span<double>
  params()
  {
    return m_params;
  }

  std::span<const double>
  params() const
  {
    return m_params;
  }

  friend bool
  operator==(const Mlp& a, const Mlp& b)
  {
    return a.m_shapes == b.m_shapes && a.m_params == b.m_params;
  }

private:
  struct Activations
  {
    std::vector<std::vector<double>> layerOutputs; // post-activation, index 0 = input
    std::vector<double> logits;
  };

  Activations
  run(std::span<const double> x) const;

  void
  checkInput(std::span<const double> x) const;

private:
  std::vector<LayerShape> m_shapes;
  std::vector<double> m_params;
};

std::vector<double>
softmax(std::span<const double> logits);

} // namespace dqnaf::neural

#endif // DQNAF_NEURAL_MLP_HPP
