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

#include "tweetaffect/defaults.h"

#include "tweetaffect/error.h"
#include "tweetaffect/text_io.h"

namespace tweetaffect {
namespace detail {
// Generated from data/default_tasks.conf at build time.
extern const char kDefaultTasksConf[];
}  // namespace detail

namespace {

std::string Key(std::string_view task_id, std::string_view suffix) {
  return "task." + std::string(task_id) + "." + std::string(suffix);
}

std::optional<SelfTrainSettings> ReadSelfTrain(const Config& config,
                                               std::string_view task_id,
                                               std::string_view family) {
  const std::string prefix = "selftrain." + std::string(family) + ".";
  if (!config.Has(Key(task_id, prefix + "threshold"))) return std::nullopt;
  SelfTrainSettings s;
  s.threshold = config.GetDouble(Key(task_id, prefix + "threshold"));
  s.added = static_cast<std::size_t>(config.GetInt(Key(task_id, prefix + "added")));
  return s;
}

void WriteSelfTrain(Config& config, std::string_view task_id,
                    std::string_view family,
                    const std::optional<SelfTrainSettings>& s) {
  if (!s) return;
  const std::string prefix = "selftrain." + std::string(family) + ".";
  config.Set(Key(task_id, prefix + "threshold"),
             text_io::FormatDouble(s->threshold));
  config.Set(Key(task_id, prefix + "added"), std::to_string(s->added));
}

}  // namespace

const TaskDefaults& DefaultsCatalog::Task(std::string_view task_id) const {
  const auto it = tasks.find(std::string(task_id));
  if (it == tasks.end()) {
    throw UsageError("no defaults for task '" + std::string(task_id) + "'");
  }
  return it->second;
}

std::vector<std::string> AllTaskIds() {
  std::vector<std::string> ids;
  for (TaskKind kind : {TaskKind::kRegression, TaskKind::kOrdinal}) {
    for (Dimension emotion : kEmotions) {
      ids.push_back(AffectTarget(emotion, kind).TaskId());
    }
  }
  ids.push_back(AffectTarget(Dimension::kValence, TaskKind::kRegression).TaskId());
  ids.push_back(AffectTarget(Dimension::kValence, TaskKind::kOrdinal).TaskId());
  return ids;
}

std::string_view ShippedDefaultsText() { return detail::kDefaultTasksConf; }

Config ShippedDefaultsConfig() {
  return Config::Parse(ShippedDefaultsText(), "default_tasks.conf");
}

DefaultsCatalog CatalogFromConfig(const Config& config) {
  DefaultsCatalog catalog;
  catalog.embeddings.algorithm =
      config.GetString("embeddings.algorithm", catalog.embeddings.algorithm);
  catalog.embeddings.window = static_cast<int>(
      config.GetInt("embeddings.window", catalog.embeddings.window));
  catalog.embeddings.min_count = static_cast<int>(
      config.GetInt("embeddings.min_count", catalog.embeddings.min_count));

  for (const std::string& id : AllTaskIds()) {
    if (!config.Has(Key(id, "svm.epsilon"))) continue;
    TaskDefaults t;
    t.task_id = id;
    t.svm_epsilon = config.GetDouble(Key(id, "svm.epsilon"));
    t.ff_layers = config.GetSizeList(Key(id, "ff.layers"));
    t.ff_dropout = config.GetDouble(Key(id, "ff.dropout"));
    t.lstm.layers = static_cast<std::size_t>(config.GetInt(Key(id, "lstm.layers")));
    t.lstm.nodes = static_cast<std::size_t>(config.GetInt(Key(id, "lstm.nodes")));
    t.lstm.dropout = config.GetDouble(Key(id, "lstm.dropout"));
    t.lstm.dense = config.GetBool(Key(id, "lstm.dense"));
    t.selftrain_ff = ReadSelfTrain(config, id, "ff");
    t.selftrain_lstm = ReadSelfTrain(config, id, "lstm");
    catalog.tasks.emplace(id, std::move(t));
  }
  for (Dimension emotion : kEmotions) {
    const std::string name(DimensionName(emotion));
    const std::string prefix = "emotion." + name + ".";
    if (!config.Has(prefix + "words")) continue;
    EmotionPoolStats stats;
    stats.words = static_cast<std::size_t>(config.GetInt(prefix + "words"));
    stats.tweets = static_cast<std::size_t>(config.GetInt(prefix + "tweets"));
    catalog.emotions.emplace(name, stats);
  }
  return catalog;
}

Config CatalogToConfig(const DefaultsCatalog& catalog) {
  Config config;
  config.Set("embeddings.algorithm", catalog.embeddings.algorithm);
  config.Set("embeddings.window", std::to_string(catalog.embeddings.window));
  config.Set("embeddings.min_count", std::to_string(catalog.embeddings.min_count));
  for (const std::string& id : AllTaskIds()) {
    const auto it = catalog.tasks.find(id);
    if (it == catalog.tasks.end()) continue;
    const TaskDefaults& t = it->second;
    config.Set(Key(id, "svm.epsilon"), text_io::FormatDouble(t.svm_epsilon));
    config.Set(Key(id, "ff.layers"), FormatSizeList(t.ff_layers));
    config.Set(Key(id, "ff.dropout"), text_io::FormatDouble(t.ff_dropout));
    config.Set(Key(id, "lstm.layers"), std::to_string(t.lstm.layers));
    config.Set(Key(id, "lstm.nodes"), std::to_string(t.lstm.nodes));
    config.Set(Key(id, "lstm.dropout"), text_io::FormatDouble(t.lstm.dropout));
    config.Set(Key(id, "lstm.dense"), t.lstm.dense ? "true" : "false");
    WriteSelfTrain(config, id, "ff", t.selftrain_ff);
    WriteSelfTrain(config, id, "lstm", t.selftrain_lstm);
  }
  for (Dimension emotion : kEmotions) {
    const std::string name(DimensionName(emotion));
    const auto it = catalog.emotions.find(name);
    if (it == catalog.emotions.end()) continue;
    config.Set("emotion." + name + ".words", std::to_string(it->second.words));
    config.Set("emotion." + name + ".tweets", std::to_string(it->second.tweets));
  }
  return config;
}

const DefaultsCatalog& ShippedDefaults() {
  static const DefaultsCatalog catalog = CatalogFromConfig(ShippedDefaultsConfig());
  return catalog;
}

}  // namespace tweetaffect
