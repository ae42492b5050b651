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

#ifndef TWEETAFFECT_EXPERIMENT_H_
#define TWEETAFFECT_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tweetaffect/config.h"
#include "tweetaffect/corpus.h"
#include "tweetaffect/ensemble.h"
#include "tweetaffect/models.h"
#include "tweetaffect/report.h"
#include "tweetaffect/semisup.h"

namespace tweetaffect {

enum class DataFlavor { kRegular, kTranslated, kSilver };

std::string_view DataFlavorName(DataFlavor flavor);
DataFlavor ParseDataFlavor(std::string_view name);

struct VariantConfig {
  std::string name;
  DataFlavor data = DataFlavor::kRegular;
  PredictorSpec spec;
  std::size_t runs = 1;
  // external kind only
  std::filesystem::path dev_predictions;
  std::filesystem::path test_predictions;
};

// Everything a run needs, with paths already resolved against the config
// file's directory. See README for the key reference.
struct ExperimentConfig {
  std::string task_id;
  std::uint64_t seed = 1;

  std::filesystem::path train;
  std::filesystem::path dev;
  std::filesystem::path test;     // optional
  std::filesystem::path foreign;  // source-language data for translation
  std::filesystem::path silver;   // unlabeled pool for self-training
  bool header = false;

  std::filesystem::path embeddings;  // optional
  std::vector<std::pair<std::string, std::filesystem::path>> lexicons;
  bool select_lexicons = false;
  std::size_t selection_folds = 5;

  std::filesystem::path dictionary;  // offline translator
  std::string translator_url;        // remote translator
  std::string source_language = "en";
  std::string target_language = "es";

  SelfTrainConfig selftrain;
  std::filesystem::path emotion_words;  // optional silver-pool restriction

  PruneOptions ensemble;
  std::vector<VariantConfig> variants;

  // Builds the config, filling unset model and self-training settings from
  // the shipped per-task defaults. Throws UsageError on invalid values.
  static ExperimentConfig FromConfig(const Config& config,
                                     const std::filesystem::path& base_dir);
  static ExperimentConfig Load(const std::filesystem::path& path);

  // Every referenced path that does not exist, as "key: path".
  std::vector<std::string> MissingResources() const;
};

struct VariantOutcome {
  std::string name;
  std::size_t training_size = 0;
  std::size_t added = 0;  // translated or silver instances
  PredictionSet dev;
  PredictionSet test;
  double dev_score = 0.0;
  std::optional<double> test_score;
};

struct ExperimentResult {
  ScoreReport report;
  std::vector<VariantOutcome> variants;
  EnsembleResult ensemble;
  std::vector<std::string> selected_lexicons;
  std::vector<std::string> log;
};

// Validates resources (all missing paths reported at once, before any
// training), trains every variant, averages runs, averages all variants,
// prunes the ensemble and scores everything with Pearson. When
// `output_dir` is set, writes predictions/, models/, report.tsv,
// manifest.tsv and run.log there.
ExperimentResult RunExperiment(
    const ExperimentConfig& config,
    const std::optional<std::filesystem::path>& output_dir = std::nullopt);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_EXPERIMENT_H_
