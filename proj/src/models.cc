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

#include "tweetaffect/models.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "tweetaffect/error.h"
#include "tweetaffect/eval.h"
#include "tweetaffect/random.h"
#include "tweetaffect/text_io.h"

namespace tweetaffect {
namespace {

using nlohmann::json;

void CheckFinite(const Matrix& x, std::span<const double> y) {
  for (double v : x.data()) {
    if (!std::isfinite(v)) throw UsageError("features contain NaN or Inf");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw UsageError("labels contain NaN or Inf");
    if (v < 0.0 || v > 1.0) throw UsageError("labels must lie in [0, 1]");
  }
}

std::string Join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string_view ActivationName(mlp::Activation activation) {
  switch (activation) {
    case mlp::Activation::kRelu:
      return "relu";
    case mlp::Activation::kSigmoid:
      return "sigmoid";
    case mlp::Activation::kLinear:
      return "linear";
  }
  return "linear";
}

mlp::Activation ParseActivation(std::string_view name) {
  if (name == "relu") return mlp::Activation::kRelu;
  if (name == "sigmoid") return mlp::Activation::kSigmoid;
  if (name == "linear") return mlp::Activation::kLinear;
  throw UsageError("unknown activation '" + std::string(name) + "'");
}

json MatrixToJson(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.Row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return rows;
}

Matrix MatrixFromJson(const json& rows) {
  Matrix m;
  for (const json& row : rows) {
    const auto values = row.get<std::vector<double>>();
    if (!m.empty() && values.size() != m.cols()) {
      throw UsageError("ragged matrix in model file");
    }
    m.AppendRow(values);
  }
  return m;
}

}  // namespace

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kKernelSvr:
      return "kernel_svr";
    case ModelKind::kFeedForward:
      return "feed_forward";
    case ModelKind::kExternal:
      return "external";
  }
  return "kernel_svr";
}

ModelKind ParseModelKind(std::string_view name) {
  if (name == "kernel_svr" || name == "svr" || name == "svm") {
    return ModelKind::kKernelSvr;
  }
  if (name == "feed_forward" || name == "ff") return ModelKind::kFeedForward;
  if (name == "external") return ModelKind::kExternal;
  throw UsageError("unknown model kind '" + std::string(name) + "'");
}

void PredictorSpec::Validate() const {
  switch (kind) {
    case ModelKind::kKernelSvr:
      if (!(epsilon > 0.0)) throw UsageError("epsilon must be positive");
      if (!(cost > 0.0)) throw UsageError("cost must be positive");
      if (!(gamma >= 0.0)) throw UsageError("gamma must be positive (or 0 for auto)");
      if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");
      if (max_passes <= 0) throw UsageError("max_passes must be positive");
      break;
    case ModelKind::kFeedForward:
      if (layers.empty()) {
        throw UsageError("feed_forward needs at least one hidden layer");
      }
      for (std::size_t width : layers) {
        if (width == 0) throw UsageError("layer widths must be positive");
      }
      if (!(dropout >= 0.0 && dropout < 1.0)) {
        throw UsageError("dropout must lie in [0, 1)");
      }
      if (epochs == 0) throw UsageError("epochs must be positive");
      if (batch_size == 0) throw UsageError("batch_size must be positive");
      if (!(learning_rate > 0.0)) {
        throw UsageError("learning_rate must be positive");
      }
      break;
    case ModelKind::kExternal:
      if (predictions_path.empty()) {
        throw UsageError("external predictor needs a predictions path");
      }
      break;
  }
}

std::string PredictorSpec::Describe() const {
  std::ostringstream out;
  out << ModelKindName(kind) << "(";
  switch (kind) {
    case ModelKind::kKernelSvr:
      out << "epsilon=" << text_io::FormatDouble(epsilon)
          << ",C=" << text_io::FormatDouble(cost) << ",gamma="
          << (gamma > 0.0 ? text_io::FormatDouble(gamma) : std::string("auto"));
      break;
    case ModelKind::kFeedForward:
      out << "layers=" << Join(layers)
          << ",dropout=" << text_io::FormatDouble(dropout)
          << ",epochs=" << epochs << ",lr=" << text_io::FormatDouble(learning_rate);
      break;
    case ModelKind::kExternal:
      out << "path=" << predictions_path;
      break;
  }
  out << ")";
  return out.str();
}

json SpecToJson(const PredictorSpec& spec) {
  return json{{"kind", ModelKindName(spec.kind)},
              {"epsilon", spec.epsilon},
              {"gamma", spec.gamma},
              {"cost", spec.cost},
              {"tolerance", spec.tolerance},
              {"max_passes", spec.max_passes},
              {"layers", spec.layers},
              {"dropout", spec.dropout},
              {"epochs", spec.epochs},
              {"batch_size", spec.batch_size},
              {"learning_rate", spec.learning_rate},
              {"lr_decay_every", spec.lr_decay_every},
              {"lr_decay_factor", spec.lr_decay_factor},
              {"standardize", spec.standardize},
              {"seed", spec.seed},
              {"predictions_path", spec.predictions_path}};
}

PredictorSpec SpecFromJson(const json& j) {
  PredictorSpec spec;
  spec.kind = ParseModelKind(j.at("kind").get<std::string>());
  spec.epsilon = j.at("epsilon").get<double>();
  spec.gamma = j.at("gamma").get<double>();
  spec.cost = j.at("cost").get<double>();
  spec.tolerance = j.at("tolerance").get<double>();
  spec.max_passes = j.at("max_passes").get<long>();
  spec.layers = j.at("layers").get<std::vector<std::size_t>>();
  spec.dropout = j.at("dropout").get<double>();
  spec.epochs = j.at("epochs").get<std::size_t>();
  spec.batch_size = j.at("batch_size").get<std::size_t>();
  spec.learning_rate = j.at("learning_rate").get<double>();
  spec.lr_decay_every = j.at("lr_decay_every").get<std::size_t>();
  spec.lr_decay_factor = j.at("lr_decay_factor").get<double>();
  spec.standardize = j.at("standardize").get<bool>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.predictions_path = j.at("predictions_path").get<std::string>();
  return spec;
}

void SavePredictions(const PredictionSet& predictions,
                     const std::filesystem::path& path) {
  if (predictions.ids.size() != predictions.values.size()) {
    throw UsageError("prediction ids and values differ in length");
  }
  std::string out;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    out += predictions.ids[i];
    out += '\t';
    out += text_io::FormatDouble(predictions.values[i]);
    out += '\n';
  }
  text_io::WriteFile(path, out);
}

PredictionSet LoadPredictions(const std::filesystem::path& path) {
  PredictionSet out;
  const std::vector<std::string> lines = text_io::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (text_io::Trim(lines[i]).empty()) continue;
    const auto fields = text_io::Split(lines[i], '\t');
    if (fields.size() != 2) {
      throw ParseError(path.string(), i + 1, "expected id<TAB>value");
    }
    const auto value = text_io::ParseDouble(text_io::Trim(fields[1]));
    if (!value) {
      throw ParseError(path.string(), i + 1,
                       "bad prediction value '" + std::string(fields[1]) + "'");
    }
    out.ids.emplace_back(fields[0]);
    out.values.push_back(*value);
  }
  return out;
}

PredictionSet AlignPredictions(const PredictionSet& predictions,
                               std::span<const std::string> ids) {
  std::unordered_map<std::string, double> by_id;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    by_id.emplace(predictions.ids[i], predictions.values[i]);
  }
  PredictionSet out;
  for (const std::string& id : ids) {
    const auto it = by_id.find(id);
    if (it == by_id.end()) throw UsageError("no prediction for id '" + id + "'");
    out.ids.push_back(id);
    out.values.push_back(it->second);
  }
  return out;
}

Standardizer Standardizer::Fit(const Matrix& x) {
  Standardizer s = Identity(x.cols());
  if (x.rows() == 0) return s;
  const double n = static_cast<double>(x.rows());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) sum += x(i, j);
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      const double d = x(i, j) - mean;
      ss += d * d;
    }
    const double sd = std::sqrt(ss / n);
    s.mean[j] = mean;
    s.scale[j] = sd > 0.0 ? 1.0 / sd : 1.0;
  }
  return s;
}

Standardizer Standardizer::Identity(std::size_t width) {
  return Standardizer{std::vector<double>(width, 0.0),
                      std::vector<double>(width, 1.0)};
}

std::vector<double> Standardizer::Apply(std::span<const double> row) const {
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = (row[j] - mean[j]) * scale[j];
  }
  return out;
}

Matrix Standardizer::ApplyAll(const Matrix& x) const {
  Matrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto row = x.Row(i);
    auto dst = out.Row(i);
    for (std::size_t j = 0; j < x.cols(); ++j) {
      dst[j] = (row[j] - mean[j]) * scale[j];
    }
  }
  return out;
}

TrainedPredictor::TrainedPredictor(PredictorSpec spec, std::size_t feature_width,
                                   Standardizer standardizer, State state,
                                   bool converged)
    : spec_(std::move(spec)),
      feature_width_(feature_width),
      standardizer_(std::move(standardizer)),
      state_(std::move(state)),
      converged_(converged) {}

double TrainedPredictor::PredictOne(std::span<const double> features) const {
  if (features.size() != feature_width_) {
    throw UsageError("model expects " + std::to_string(feature_width_) +
                     " features, got " + std::to_string(features.size()));
  }
  const std::vector<double> z = standardizer_.Apply(features);
  const double raw = std::visit([&](const auto& m) { return m.Predict(z); },
                                state_);
  return std::clamp(raw, 0.0, 1.0);
}

std::vector<double> TrainedPredictor::PredictAll(const Matrix& x) const {
  std::vector<double> out;
  out.reserve(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out.push_back(PredictOne(x.Row(i)));
  return out;
}

json TrainedPredictor::ToJson() const {
  json j{{"spec", SpecToJson(spec_)},
         {"feature_width", feature_width_},
         {"converged", converged_},
         {"standardizer",
          {{"mean", standardizer_.mean}, {"scale", standardizer_.scale}}}};
  if (const auto* model = std::get_if<svr::Model>(&state_)) {
    j["svr"] = {{"support_vectors", MatrixToJson(model->support_vectors())},
                {"coefficients", model->coefficients()},
                {"bias", model->bias()},
                {"gamma", model->gamma()}};
  } else {
    const auto& net = std::get<mlp::Network>(state_);
    const mlp::Architecture& a = net.architecture();
    j["mlp"] = {{"input_width", a.input_width},
                {"hidden", a.hidden},
                {"hidden_activation", ActivationName(a.hidden_activation)},
                {"output_activation", ActivationName(a.output_activation)},
                {"dropout", a.dropout},
                {"parameters", std::vector<double>(net.parameters().begin(),
                                                   net.parameters().end())}};
  }
  return j;
}

TrainedPredictor TrainedPredictor::FromJson(const json& j) {
  try {
    PredictorSpec spec = SpecFromJson(j.at("spec"));
    const auto width = j.at("feature_width").get<std::size_t>();
    Standardizer standardizer{
        j.at("standardizer").at("mean").get<std::vector<double>>(),
        j.at("standardizer").at("scale").get<std::vector<double>>()};
    if (standardizer.mean.size() != width || standardizer.scale.size() != width) {
      throw UsageError("standardizer width does not match the model");
    }
    const bool converged = j.at("converged").get<bool>();
    if (j.contains("svr")) {
      const json& s = j.at("svr");
      svr::Model model(MatrixFromJson(s.at("support_vectors")),
                       s.at("coefficients").get<std::vector<double>>(),
                       s.at("bias").get<double>(), s.at("gamma").get<double>());
      return TrainedPredictor(std::move(spec), width, std::move(standardizer),
                              std::move(model), converged);
    }
    const json& m = j.at("mlp");
    mlp::Architecture a;
    a.input_width = m.at("input_width").get<std::size_t>();
    a.hidden = m.at("hidden").get<std::vector<std::size_t>>();
    a.hidden_activation =
        ParseActivation(m.at("hidden_activation").get<std::string>());
    a.output_activation =
        ParseActivation(m.at("output_activation").get<std::string>());
    a.dropout = m.at("dropout").get<double>();
    mlp::Network net(a, m.at("parameters").get<std::vector<double>>());
    return TrainedPredictor(std::move(spec), width, std::move(standardizer),
                            std::move(net), converged);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed model: ") + e.what());
  }
}

void TrainedPredictor::Save(const std::filesystem::path& path) const {
  text_io::WriteFile(path, ToJson().dump(1) + "\n");
}

TrainedPredictor TrainedPredictor::Load(const std::filesystem::path& path) {
  std::string text;
  for (const std::string& line : text_io::ReadLines(path)) {
    text += line;
    text += '\n';
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError(path.string() + ": not valid JSON");
  return FromJson(j);
}

mlp::Architecture ArchitectureFor(const PredictorSpec& spec,
                                  std::size_t input_width) {
  mlp::Architecture a;
  a.input_width = input_width;
  a.hidden = spec.layers;
  a.hidden_activation = mlp::Activation::kRelu;
  a.output_activation = mlp::Activation::kSigmoid;
  a.dropout = spec.dropout;
  return a;
}

TrainedPredictor Train(const PredictorSpec& spec, const Matrix& x,
                       std::span<const double> y) {
  spec.Validate();
  if (spec.kind == ModelKind::kExternal) {
    throw UsageError("external predictors are loaded from files, not trained");
  }
  if (x.rows() != y.size()) {
    throw UsageError("feature rows (" + std::to_string(x.rows()) +
                     ") and labels (" + std::to_string(y.size()) + ") differ");
  }
  if (y.empty()) throw UsageError("training needs at least one instance");
  CheckFinite(x, y);

  const std::size_t width = x.cols();
  Standardizer standardizer =
      spec.standardize ? Standardizer::Fit(x) : Standardizer::Identity(width);
  const Matrix z = standardizer.ApplyAll(x);

  if (spec.kind == ModelKind::kKernelSvr) {
    svr::SolverOptions options;
    options.epsilon = spec.epsilon;
    options.cost = spec.cost;
    options.gamma =
        spec.gamma > 0.0 ? spec.gamma
                         : 1.0 / static_cast<double>(std::max<std::size_t>(width, 1));
    options.tolerance = spec.tolerance;
    options.max_passes = spec.max_passes;
    const svr::Solution solution = svr::Solve(z, y, options);
    return TrainedPredictor(spec, width, std::move(standardizer),
                            svr::Model(z, solution, options.gamma),
                            solution.converged);
  }

  mlp::TrainOptions options;
  options.epochs = spec.epochs;
  options.batch_size = spec.batch_size;
  options.learning_rate = spec.learning_rate;
  options.lr_decay_every = spec.lr_decay_every;
  options.lr_decay_factor = spec.lr_decay_factor;
  options.seed = spec.seed;
  mlp::TrainResult result = mlp::Train(ArchitectureFor(spec, width), z, y, options);
  return TrainedPredictor(spec, width, std::move(standardizer),
                          std::move(result.network), result.converged);
}

PredictionSet Predict(const TrainedPredictor& model, const Matrix& x,
                      std::vector<std::string> ids) {
  if (ids.empty()) {
    for (std::size_t i = 0; i < x.rows(); ++i) ids.push_back(std::to_string(i));
  }
  if (ids.size() != x.rows()) {
    throw UsageError("prediction ids and feature rows differ in length");
  }
  if (x.rows() > 0 && x.cols() != model.feature_width()) {
    throw UsageError("model expects " + std::to_string(model.feature_width()) +
                     " features, got " + std::to_string(x.cols()));
  }
  return PredictionSet{std::move(ids), model.PredictAll(x)};
}

std::vector<double> AverageRuns(
    std::size_t runs, std::uint64_t seed_base,
    const std::function<std::vector<double>(std::uint64_t seed)>& run) {
  if (runs == 0) throw UsageError("runs must be at least 1");
  std::vector<double> sum;
  for (std::size_t r = 0; r < runs; ++r) {
    std::vector<double> values;
    try {
      values = run(seed_base + r);
    } catch (const Error& e) {
      throw Error(e.kind(), "run " + std::to_string(r) + " (seed " +
                                std::to_string(seed_base + r) + "): " + e.what());
    }
    if (r == 0) {
      sum = std::move(values);
      continue;
    }
    if (values.size() != sum.size()) {
      throw ComputationError("runs produced prediction vectors of different length");
    }
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += values[i];
  }
  for (double& v : sum) v /= static_cast<double>(runs);
  return sum;
}

std::vector<double> AverageRuns(const PredictorSpec& spec,
                                const Matrix& x_train,
                                std::span<const double> y_train,
                                const Matrix& x_eval, std::size_t runs,
                                std::uint64_t seed_base) {
  return AverageRuns(runs, seed_base, [&](std::uint64_t seed) {
    PredictorSpec seeded = spec;
    seeded.seed = seed;
    return Train(seeded, x_train, y_train).PredictAll(x_eval);
  });
}

std::vector<std::size_t> AssignFolds(std::size_t rows, std::size_t folds,
                                     std::uint64_t shuffle_seed) {
  if (folds < 2) throw UsageError("cross-validation needs at least 2 folds");
  if (rows < folds) {
    throw UsageError("cannot split " + std::to_string(rows) + " rows into " +
                     std::to_string(folds) + " folds");
  }
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(shuffle_seed);
  rng.Shuffle(std::span<std::size_t>(order));
  std::vector<std::size_t> fold_of(rows);
  for (std::size_t p = 0; p < rows; ++p) fold_of[order[p]] = p % folds;
  return fold_of;
}

CvResult CrossValidate(const PredictorSpec& spec, const Matrix& x,
                       std::span<const double> y, std::size_t folds,
                       std::uint64_t shuffle_seed) {
  if (x.rows() != y.size()) {
    throw UsageError("feature rows and labels differ in length");
  }
  const std::vector<std::size_t> fold_of = AssignFolds(y.size(), folds, shuffle_seed);
  CvResult result;
  for (std::size_t f = 0; f < folds; ++f) {
    std::vector<std::size_t> train_rows, test_rows;
    for (std::size_t i = 0; i < fold_of.size(); ++i) {
      (fold_of[i] == f ? test_rows : train_rows).push_back(i);
    }
    double score = 0.0;
    if (x.cols() > 0) {
      std::vector<double> y_train, y_test;
      for (std::size_t i : train_rows) y_train.push_back(y[i]);
      for (std::size_t i : test_rows) y_test.push_back(y[i]);
      const TrainedPredictor model = Train(spec, x.SelectRows(train_rows), y_train);
      const std::vector<double> predicted = model.PredictAll(x.SelectRows(test_rows));
      try {
        score = Pearson(predicted, y_test);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kComputation) throw;
        score = 0.0;
      }
    }
    result.fold_scores.push_back(score);
  }
  result.mean_score =
      std::accumulate(result.fold_scores.begin(), result.fold_scores.end(), 0.0) /
      static_cast<double>(folds);
  return result;
}

GridResult GridSearch(std::span<const PredictorSpec> specs, const Matrix& x,
                      std::span<const double> y, std::size_t folds,
                      std::uint64_t shuffle_seed) {
  if (specs.empty()) throw UsageError("grid search needs at least one spec");
  GridResult result;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    CvResult cv;
    try {
      cv = CrossValidate(specs[k], x, y, folds, shuffle_seed);
    } catch (const Error& e) {
      throw Error(e.kind(), specs[k].Describe() + ": " + e.what());
    }
    if (k == 0 || cv.mean_score > result.rows[result.best_index].cv.mean_score) {
      result.best_index = k;
    }
    result.rows.push_back(GridRow{specs[k], std::move(cv)});
  }
  result.best = result.rows[result.best_index].spec;
  return result;
}

GridResult GridSearch(std::span<const PredictorSpec> specs,
                      const FeatureSpec& features, const Dataset& data,
                      std::size_t folds, std::uint64_t shuffle_seed) {
  const Matrix x = features.FeaturizeDataset(data);
  const std::vector<double> y = data.Labels();
  return GridSearch(specs, x, y, folds, shuffle_seed);
}

std::vector<double> DefaultEpsilonGrid() {
  return {0.005, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09};
}

GradientCheck FiniteDifferenceCheck(const mlp::Network& network,
                                    std::span<const double> x, double y) {
  GradientCheck check;
  std::vector<double> analytic(network.parameter_count(), 0.0);
  network.LossAndGradient(x, y, analytic, nullptr);
  mlp::Network probe = network;
  std::span<double> params = probe.mutable_parameters();
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double saved = params[k];
    params[k] = saved + kGradientCheckStep;
    const double plus = probe.LossAndGradient(x, y, {}, nullptr);
    params[k] = saved - kGradientCheckStep;
    const double minus = probe.LossAndGradient(x, y, {}, nullptr);
    params[k] = saved;
    const double numeric = (plus - minus) / (2.0 * kGradientCheckStep);
    const double denominator =
        std::max({std::abs(analytic[k]), std::abs(numeric), 1e-6});
    const double relative = std::abs(analytic[k] - numeric) / denominator;
    check.entries.push_back(GradientEntry{k, network.ParameterName(k),
                                          analytic[k], numeric, relative});
    check.max_relative_error = std::max(check.max_relative_error, relative);
  }
  return check;
}

GradientCheck FiniteDifferenceCheck(const PredictorSpec& spec,
                                    std::span<const double> x, double y) {
  if (spec.kind != ModelKind::kFeedForward) {
    throw UsageError("gradient checks apply to feed_forward specs only");
  }
  spec.Validate();
  mlp::Architecture a = ArchitectureFor(spec, x.size());
  a.dropout = 0.0;
  Rng rng(spec.seed);
  return FiniteDifferenceCheck(mlp::Network(a, rng), x, y);
}

}  // namespace tweetaffect
