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

#ifndef TWEETAFFECT_MLP_H_
#define TWEETAFFECT_MLP_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tweetaffect/matrix.h"
#include "tweetaffect/random.h"

namespace tweetaffect::mlp {

enum class Activation { kRelu, kSigmoid, kLinear };

struct Architecture {
  std::size_t input_width = 0;
  std::vector<std::size_t> hidden;
  Activation hidden_activation = Activation::kRelu;
  Activation output_activation = Activation::kSigmoid;
  // Inverted dropout after every hidden layer, training only.
  double dropout = 0.0;
};

// Dense network with a single output unit. All weights and biases live in one
// flat parameter vector: per layer, the row-major weight matrix (out x in)
// followed by the bias vector.
class Network {
 public:
  Network() = default;
  // Weights drawn He-uniform for ReLU layers, Glorot-uniform otherwise;
  // biases start at zero.
  Network(Architecture architecture, Rng& rng);
  Network(Architecture architecture, std::vector<double> parameters);

  const Architecture& architecture() const { return architecture_; }
  std::span<const double> parameters() const { return parameters_; }
  std::span<double> mutable_parameters() { return parameters_; }
  std::size_t parameter_count() const { return parameters_.size(); }
  std::size_t layer_count() const { return layers_.size(); }

  // Offset of layer `l`'s bias block inside the parameter vector.
  std::size_t BiasOffset(std::size_t layer) const;
  // Human-readable name of parameter `index`, e.g. "layer1.w[3,0]".
  std::string ParameterName(std::size_t index) const;

  double Predict(std::span<const double> x) const;

  // Squared error (prediction - target)^2. When `gradient` is non-null the
  // parameter gradient is accumulated into it (not overwritten). When
  // `dropout_rng` is non-null dropout masks are sampled from it.
  double LossAndGradient(std::span<const double> x, double target,
                         std::span<double> gradient, Rng* dropout_rng) const;

 private:
  struct Layer {
    std::size_t in = 0;
    std::size_t out = 0;
    std::size_t weight_offset = 0;
    std::size_t bias_offset = 0;
    Activation activation = Activation::kLinear;
  };

  void BuildLayout();

  Architecture architecture_;
  std::vector<Layer> layers_;
  std::vector<double> parameters_;
};

struct TrainOptions {
  std::size_t epochs = 100;
  std::size_t batch_size = 32;
  double learning_rate = 1e-3;
  // Step decay: the rate is multiplied by `lr_decay_factor` every
  // `lr_decay_every` epochs (0 disables).
  std::size_t lr_decay_every = 50;
  double lr_decay_factor = 0.5;
  std::uint64_t seed = 0;
};

struct TrainResult {
  Network network;
  // Full-data training loss (no dropout) before training and after each epoch.
  std::vector<double> loss_history;
  std::size_t best_epoch = 0;
  // False when the loss was still falling at the end of the budget.
  bool converged = true;
};

// Adam on mean squared error; keeps the parameters of the epoch with the
// lowest full-data training loss.
TrainResult Train(const Architecture& architecture, const Matrix& x,
                  std::span<const double> y, const TrainOptions& options);

double MeanLoss(const Network& network, const Matrix& x,
                std::span<const double> y);

}  // namespace tweetaffect::mlp

#endif  // TWEETAFFECT_MLP_H_
