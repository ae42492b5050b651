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

#ifndef TWEETAFFECT_MODELS_H_
#define TWEETAFFECT_MODELS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nlohmann/json.hpp"
#include "tweetaffect/corpus.h"
#include "tweetaffect/features.h"
#include "tweetaffect/matrix.h"
#include "tweetaffect/mlp.h"
#include "tweetaffect/svr.h"

namespace tweetaffect {

enum class ModelKind { kKernelSvr, kFeedForward, kExternal };

// "kernel_svr", "feed_forward", "external". Parsing also accepts "svr"/"svm"
// and "ff".
std::string_view ModelKindName(ModelKind kind);
ModelKind ParseModelKind(std::string_view name);

struct PredictorSpec {
  ModelKind kind = ModelKind::kKernelSvr;

  // kernel_svr
  double epsilon = 0.1;
  double gamma = 0.0;  // 0 selects 1 / feature width
  double cost = 1.0;
  double tolerance = 1e-4;
  long max_passes = 10000;

  // feed_forward
  std::vector<std::size_t> layers;
  double dropout = 0.001;
  std::size_t epochs = 100;
  std::size_t batch_size = 32;
  double learning_rate = 1e-3;
  std::size_t lr_decay_every = 50;
  double lr_decay_factor = 0.5;

  // Z-score features on the training data (kernel_svr and feed_forward).
  bool standardize = true;
  std::uint64_t seed = 0;

  // external: prediction file with `id<TAB>value` rows.
  std::string predictions_path;

  // Throws UsageError when a field meaningful for `kind` is out of range.
  void Validate() const;
  // Compact one-line description, e.g. "kernel_svr(epsilon=0.01,C=1,gamma=auto)".
  std::string Describe() const;

  bool operator==(const PredictorSpec&) const = default;
};

nlohmann::json SpecToJson(const PredictorSpec& spec);
PredictorSpec SpecFromJson(const nlohmann::json& json);

struct PredictionSet {
  std::vector<std::string> ids;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  bool operator==(const PredictionSet&) const = default;
};

// `id<TAB>value` per line; values written in shortest round-trip form.
void SavePredictions(const PredictionSet& predictions,
                     const std::filesystem::path& path);
PredictionSet LoadPredictions(const std::filesystem::path& path);
// Reorders `predictions` to follow `ids`; throws naming the first missing id.
PredictionSet AlignPredictions(const PredictionSet& predictions,
                               std::span<const std::string> ids);

// Per-column affine map fitted on training data. Constant columns are only
// centered.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;

  static Standardizer Fit(const Matrix& x);
  static Standardizer Identity(std::size_t width);
  std::vector<double> Apply(std::span<const double> row) const;
  Matrix ApplyAll(const Matrix& x) const;
  bool operator==(const Standardizer&) const = default;
};

class TrainedPredictor {
 public:
  using State = std::variant<svr::Model, mlp::Network>;

  TrainedPredictor(PredictorSpec spec, std::size_t feature_width,
                   Standardizer standardizer, State state, bool converged);

  const PredictorSpec& spec() const { return spec_; }
  std::size_t feature_width() const { return feature_width_; }
  // False when the solver or the epoch budget ran out first; the fitted
  // state is then the best found.
  bool converged() const { return converged_; }
  const Standardizer& standardizer() const { return standardizer_; }
  const State& state() const { return state_; }

  // Prediction clipped to [0,1]. Throws on a width mismatch.
  double PredictOne(std::span<const double> features) const;
  std::vector<double> PredictAll(const Matrix& x) const;

  nlohmann::json ToJson() const;
  static TrainedPredictor FromJson(const nlohmann::json& json);
  void Save(const std::filesystem::path& path) const;
  static TrainedPredictor Load(const std::filesystem::path& path);

 private:
  PredictorSpec spec_;
  std::size_t feature_width_;
  Standardizer standardizer_;
  State state_;
  bool converged_;
};

// Fits kernel_svr or feed_forward. Throws on non-finite inputs, labels outside
// [0,1], a row/label count mismatch or an external spec.
TrainedPredictor Train(const PredictorSpec& spec, const Matrix& x,
                       std::span<const double> y);

// Predictions for the rows of `x`. Ids default to the row index.
PredictionSet Predict(const TrainedPredictor& model, const Matrix& x,
                      std::vector<std::string> ids = {});

// Element-wise mean of the outputs of `runs` calls with seeds
// seed_base .. seed_base + runs - 1, accumulated in seed order.
std::vector<double> AverageRuns(
    std::size_t runs, std::uint64_t seed_base,
    const std::function<std::vector<double>(std::uint64_t seed)>& run);

std::vector<double> AverageRuns(const PredictorSpec& spec,
                                const Matrix& x_train,
                                std::span<const double> y_train,
                                const Matrix& x_eval, std::size_t runs,
                                std::uint64_t seed_base);

// Deterministic fold index per row: a seeded shuffle dealt round-robin.
std::vector<std::size_t> AssignFolds(std::size_t rows, std::size_t folds,
                                     std::uint64_t shuffle_seed);

struct CvResult {
  double mean_score = 0.0;
  std::vector<double> fold_scores;
};

inline constexpr std::uint64_t kFoldShuffleSeed = 20180601;

// Mean out-of-fold Pearson. A fold whose predictions or labels are constant
// scores 0; zero-width features score 0 without training.
CvResult CrossValidate(const PredictorSpec& spec, const Matrix& x,
                       std::span<const double> y, std::size_t folds,
                       std::uint64_t shuffle_seed = kFoldShuffleSeed);

struct GridRow {
  PredictorSpec spec;
  CvResult cv;
};

struct GridResult {
  std::size_t best_index = 0;
  PredictorSpec best;
  std::vector<GridRow> rows;
};

// Best spec by mean cross-validated Pearson; the earlier spec wins ties.
GridResult GridSearch(std::span<const PredictorSpec> specs, const Matrix& x,
                      std::span<const double> y, std::size_t folds = 10,
                      std::uint64_t shuffle_seed = kFoldShuffleSeed);
GridResult GridSearch(std::span<const PredictorSpec> specs,
                      const FeatureSpec& features, const Dataset& data,
                      std::size_t folds = 10,
                      std::uint64_t shuffle_seed = kFoldShuffleSeed);

// The epsilon values searched by default for the kernel regressor.
std::vector<double> DefaultEpsilonGrid();

struct GradientEntry {
  std::size_t index = 0;
  std::string name;
  double analytic = 0.0;
  double numeric = 0.0;
  double relative_error = 0.0;
};

struct GradientCheck {
  double max_relative_error = 0.0;
  std::vector<GradientEntry> entries;
};

inline constexpr double kGradientCheckStep = 1e-5;

// Central differences of the squared-error loss against backpropagation,
// dropout off. Relative error |a - n| / max(|a|, |n|, 1e-6).
GradientCheck FiniteDifferenceCheck(const mlp::Network& network,
                                    std::span<const double> x, double y);
// Builds a freshly initialized network from `spec` (seeded by spec.seed).
GradientCheck FiniteDifferenceCheck(const PredictorSpec& spec,
                                    std::span<const double> x, double y);

mlp::Architecture ArchitectureFor(const PredictorSpec& spec,
                                  std::size_t input_width);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_MODELS_H_
