//
// Copyright 2026 The tweetaffect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "tweetaffect/mlp.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tweetaffect/error.h"
#include "tweetaffect/simd.h"

namespace tweetaffect::mlp {
namespace {

double Activate(Activation activation, double z) {
  switch (activation) {
    case Activation::kRelu:
      return z > 0.0 ? z : 0.0;
    case Activation::kSigmoid:
      return 1.0 / (1.0 + std::exp(-z));
    case Activation::kLinear:
      return z;
  }
  return z;
}

// Derivative expressed through the pre-activation and the activation value.
double Derivative(Activation activation, double z, double a) {
  switch (activation) {
    case Activation::kRelu:
      return z > 0.0 ? 1.0 : 0.0;
    case Activation::kSigmoid:
      return a * (1.0 - a);
    case Activation::kLinear:
      return 1.0;
  }
  return 1.0;
}

}  // namespace

Network::Network(Architecture architecture, Rng& rng)
    : architecture_(std::move(architecture)) {
  BuildLayout();
  for (const Layer& layer : layers_) {
    const double fan_in = static_cast<double>(layer.in);
    const double fan_out = static_cast<double>(layer.out);
    const double limit = layer.activation == Activation::kRelu
                             ? std::sqrt(6.0 / std::max(fan_in, 1.0))
                             : std::sqrt(6.0 / std::max(fan_in + fan_out, 1.0));
    for (std::size_t k = 0; k < layer.in * layer.out; ++k) {
      parameters_[layer.weight_offset + k] = rng.Uniform(-limit, limit);
    }
  }
}

Network::Network(Architecture architecture, std::vector<double> parameters)
    : architecture_(std::move(architecture)) {
  BuildLayout();
  if (parameters.size() != parameters_.size()) {
    throw UsageError("network expects " + std::to_string(parameters_.size()) +
                     " parameters, got " + std::to_string(parameters.size()));
  }
  parameters_ = std::move(parameters);
}

void Network::BuildLayout() {
  if (!(architecture_.dropout >= 0.0 && architecture_.dropout < 1.0)) {
    throw UsageError("dropout must lie in [0, 1)");
  }
  layers_.clear();
  std::size_t in = architecture_.input_width;
  std::size_t offset = 0;
  auto add = [&](std::size_t out, Activation activation) {
    if (out == 0) throw UsageError("layer widths must be positive");
    Layer layer{in, out, offset, offset + in * out, activation};
    offset = layer.bias_offset + out;
    layers_.push_back(layer);
    in = out;
  };
  for (std::size_t width : architecture_.hidden) {
    add(width, architecture_.hidden_activation);
  }
  add(1, architecture_.output_activation);
  parameters_.assign(offset, 0.0);
}

std::size_t Network::BiasOffset(std::size_t layer) const {
  return layers_.at(layer).bias_offset;
}

std::string Network::ParameterName(std::size_t index) const {
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const Layer& layer = layers_[l];
    if (index < layer.bias_offset) {
      const std::size_t k = index - layer.weight_offset;
      return "layer" + std::to_string(l) + ".w[" + std::to_string(k / layer.in) +
             "," + std::to_string(k % layer.in) + "]";
    }
    if (index < layer.bias_offset + layer.out) {
      return "layer" + std::to_string(l) + ".b[" +
             std::to_string(index - layer.bias_offset) + "]";
    }
  }
  return "out-of-range";
}

double Network::Predict(std::span<const double> x) const {
  if (x.size() != architecture_.input_width) {
    throw UsageError("input has width " + std::to_string(x.size()) +
                     ", network expects " +
                     std::to_string(architecture_.input_width));
  }
  std::vector<double> current(x.begin(), x.end());
  std::vector<double> next;
  for (const Layer& layer : layers_) {
    next.resize(layer.out);
    for (std::size_t j = 0; j < layer.out; ++j) {
      const std::span<const double> row(
          parameters_.data() + layer.weight_offset + j * layer.in, layer.in);
      next[j] = Activate(layer.activation,
                         simd::Dot(row, current) +
                             parameters_[layer.bias_offset + j]);
    }
    current.swap(next);
  }
  return current[0];
}

double Network::LossAndGradient(std::span<const double> x, double target,
                                std::span<double> gradient,
                                Rng* dropout_rng) const {
  if (x.size() != architecture_.input_width) {
    throw UsageError("input has width " + std::to_string(x.size()) +
                     ", network expects " +
                     std::to_string(architecture_.input_width));
  }
  const std::size_t depth = layers_.size();
  std::vector<std::vector<double>> activations(depth + 1);
  std::vector<std::vector<double>> pre(depth);
  std::vector<std::vector<double>> masks(depth);
  activations[0].assign(x.begin(), x.end());
  const double rate = architecture_.dropout;
  const bool drop = dropout_rng != nullptr && rate > 0.0;

  for (std::size_t l = 0; l < depth; ++l) {
    const Layer& layer = layers_[l];
    const std::span<const double> in = activations[l];
    std::vector<double>& z = pre[l];
    std::vector<double>& a = activations[l + 1];
    z.resize(layer.out);
    a.resize(layer.out);
    for (std::size_t j = 0; j < layer.out; ++j) {
      const std::span<const double> row(
          parameters_.data() + layer.weight_offset + j * layer.in, layer.in);
      z[j] = simd::Dot(row, in) + parameters_[layer.bias_offset + j];
      a[j] = Activate(layer.activation, z[j]);
    }
    const bool hidden = l + 1 < depth;
    if (hidden && drop) {
      masks[l].resize(layer.out);
      const double keep_scale = 1.0 / (1.0 - rate);
      for (std::size_t j = 0; j < layer.out; ++j) {
        masks[l][j] = dropout_rng->Bernoulli(rate) ? 0.0 : keep_scale;
        a[j] *= masks[l][j];
      }
    }
  }

  const double prediction = activations[depth][0];
  const double error = prediction - target;
  const double loss = error * error;
  if (gradient.empty()) return loss;
  if (gradient.size() != parameters_.size()) {
    throw UsageError("gradient buffer has the wrong size");
  }

  std::vector<double> delta{
      2.0 * error *
      Derivative(layers_.back().activation, pre[depth - 1][0], prediction)};
  for (std::size_t l = depth; l-- > 0;) {
    const Layer& layer = layers_[l];
    const std::span<const double> in = activations[l];
    for (std::size_t j = 0; j < layer.out; ++j) {
      gradient[layer.bias_offset + j] += delta[j];
      simd::Axpy(delta[j], in,
                 gradient.subspan(layer.weight_offset + j * layer.in, layer.in));
    }
    if (l == 0) break;
    std::vector<double> below(layer.in, 0.0);
    for (std::size_t j = 0; j < layer.out; ++j) {
      const std::span<const double> row(
          parameters_.data() + layer.weight_offset + j * layer.in, layer.in);
      simd::Axpy(delta[j], row, below);
    }
    const Layer& prev = layers_[l - 1];
    for (std::size_t k = 0; k < layer.in; ++k) {
      const double mask = masks[l - 1].empty() ? 1.0 : masks[l - 1][k];
      // Activation value before the dropout mask was applied.
      const double a = Activate(prev.activation, pre[l - 1][k]);
      below[k] *= mask * Derivative(prev.activation, pre[l - 1][k], a);
    }
    delta = std::move(below);
  }
  return loss;
}

double MeanLoss(const Network& network, const Matrix& x,
                std::span<const double> y) {
  if (x.rows() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double error = network.Predict(x.Row(i)) - y[i];
    total += error * error;
  }
  return total / static_cast<double>(x.rows());
}

TrainResult Train(const Architecture& architecture, const Matrix& x,
                  std::span<const double> y, const TrainOptions& options) {
  if (x.rows() != y.size() || x.rows() == 0) {
    throw UsageError("training needs matching, non-empty inputs and labels");
  }
  if (options.batch_size == 0) throw UsageError("batch size must be positive");
  Rng rng(options.seed);
  TrainResult result;
  result.network = Network(architecture, rng);
  Network& net = result.network;

  const std::size_t p = net.parameter_count();
  std::vector<double> m(p, 0.0), v(p, 0.0), grad(p);
  std::vector<double> best(net.parameters().begin(), net.parameters().end());
  constexpr double kBeta1 = 0.9;
  constexpr double kBeta2 = 0.999;
  constexpr double kAdamEpsilon = 1e-7;
  double beta1_power = 1.0;
  double beta2_power = 1.0;

  double best_loss = MeanLoss(net, x, y);
  result.loss_history.push_back(best_loss);
  std::vector<std::size_t> order(x.rows());
  std::iota(order.begin(), order.end(), 0);

  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    double rate = options.learning_rate;
    if (options.lr_decay_every > 0) {
      rate *= std::pow(options.lr_decay_factor,
                       static_cast<double>(epoch / options.lr_decay_every));
    }
    rng.Shuffle(std::span<std::size_t>(order));
    for (std::size_t start = 0; start < order.size();
         start += options.batch_size) {
      const std::size_t end = std::min(order.size(), start + options.batch_size);
      std::fill(grad.begin(), grad.end(), 0.0);
      for (std::size_t k = start; k < end; ++k) {
        net.LossAndGradient(x.Row(order[k]), y[order[k]], grad, &rng);
      }
      const double scale = 1.0 / static_cast<double>(end - start);
      beta1_power *= kBeta1;
      beta2_power *= kBeta2;
      const double step =
          rate * std::sqrt(1.0 - beta2_power) / (1.0 - beta1_power);
      std::span<double> params = net.mutable_parameters();
      for (std::size_t k = 0; k < p; ++k) {
        const double g = grad[k] * scale;
        m[k] = kBeta1 * m[k] + (1.0 - kBeta1) * g;
        v[k] = kBeta2 * v[k] + (1.0 - kBeta2) * g * g;
        params[k] -= step * m[k] / (std::sqrt(v[k]) + kAdamEpsilon);
      }
    }
    const double loss = MeanLoss(net, x, y);
    result.loss_history.push_back(loss);
    if (loss < best_loss) {
      best_loss = loss;
      result.best_epoch = epoch + 1;
      std::copy(net.parameters().begin(), net.parameters().end(), best.begin());
    }
  }
  std::copy(best.begin(), best.end(), net.mutable_parameters().begin());

  const std::size_t window = std::max<std::size_t>(1, options.epochs / 10);
  if (options.epochs >= window && result.loss_history.size() > window) {
    const double earlier =
        result.loss_history[result.loss_history.size() - 1 - window];
    const double relative = (earlier - best_loss) / std::max(earlier, 1e-12);
    result.converged = relative < 1e-3;
  }
  return result;
}

}  // namespace tweetaffect::mlp
