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

#ifndef TWEETAFFECT_DEFAULTS_H_
#define TWEETAFFECT_DEFAULTS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tweetaffect/config.h"
#include "tweetaffect/corpus.h"
#include "tweetaffect/embeddings.h"

namespace tweetaffect {

struct LstmSettings {
  std::size_t layers = 0;
  std::size_t nodes = 0;
  double dropout = 0.0;
  // An extra dense layer with nodes / 2 units after the recurrent layers.
  bool dense = false;
  bool operator==(const LstmSettings&) const = default;
};

struct SelfTrainSettings {
  double threshold = 0.0;
  std::size_t added = 0;
  bool operator==(const SelfTrainSettings&) const = default;
};

struct TaskDefaults {
  std::string task_id;
  double svm_epsilon = 0.0;
  std::vector<std::size_t> ff_layers;
  double ff_dropout = 0.0;
  LstmSettings lstm;
  // Present for the emotion-intensity tasks only.
  std::optional<SelfTrainSettings> selftrain_ff;
  std::optional<SelfTrainSettings> selftrain_lstm;
  bool operator==(const TaskDefaults&) const = default;
};

struct EmotionPoolStats {
  std::size_t words = 0;
  std::size_t tweets = 0;
  bool operator==(const EmotionPoolStats&) const = default;
};

struct DefaultsCatalog {
  EmbeddingProvenance embeddings;
  std::map<std::string, TaskDefaults> tasks;  // keyed by task id
  std::map<std::string, EmotionPoolStats> emotions;

  // Throws UsageError for an unknown task id.
  const TaskDefaults& Task(std::string_view task_id) const;
};

// The ten task ids in a fixed order: EI-Reg per emotion, EI-Oc per emotion,
// V-Reg, V-Oc.
std::vector<std::string> AllTaskIds();

// Text of the defaults file compiled into the library.
std::string_view ShippedDefaultsText();
Config ShippedDefaultsConfig();

DefaultsCatalog CatalogFromConfig(const Config& config);
Config CatalogToConfig(const DefaultsCatalog& catalog);
const DefaultsCatalog& ShippedDefaults();

}  // namespace tweetaffect

#endif  // TWEETAFFECT_DEFAULTS_H_
