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

#ifndef TWEETAFFECT_SEMISUP_H_
#define TWEETAFFECT_SEMISUP_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tweetaffect/corpus.h"
#include "tweetaffect/features.h"
#include "tweetaffect/models.h"

namespace tweetaffect {

struct WordRatio {
  std::string word;
  double ratio = 0.0;
  std::size_t target_count = 0;
  std::size_t background_count = 0;
  bool operator==(const WordRatio&) const = default;
};

// Ranks word tokens of `target` by
//   ((f_target + 1) / N_target) / ((f_background + 1) / N_background)
// where f counts occurrences and N is the corpus size in tokens. Both corpora
// are first reduced to distinct token sequences, so repeating every tweet
// leaves the ranking unchanged. Tokens without a letter or digit and the URL
// and user placeholders are not candidates. Ties go to the smaller word.
std::vector<WordRatio> MineIndicatorWords(std::span<const Tweet> target,
                                          std::span<const Tweet> background,
                                          std::size_t top_n = 100);

void SaveWordRanking(std::span<const WordRatio> ranking,
                     const std::filesystem::path& path);

// Manually annotated indicator words. A word maps to at most one emotion.
class EmotionWordList {
 public:
  // Throws UsageError if `word` is already assigned to another emotion or
  // `emotion` is valence.
  void Add(std::string_view word, Dimension emotion);
  std::optional<Dimension> EmotionOf(std::string_view word) const;
  const std::set<std::string>& Words(Dimension emotion) const;
  std::size_t size() const { return emotion_of_.size(); }

  // Ranking the annotation was made from, if known.
  std::vector<WordRatio> ranking;

 private:
  std::map<std::string, Dimension> emotion_of_;
  std::map<Dimension, std::set<std::string>> words_;
};

// `word<TAB>emotion` rows, emotion in {anger, fear, joy, sadness, discard}.
EmotionWordList LoadEmotionWords(const std::filesystem::path& path);

// Every emotion maps to the tweets containing at least one of its words (as a
// whole token). A tweet can land in several sets. All four emotions are
// present in the result.
std::map<Dimension, std::vector<Tweet>> BuildSilverSets(
    const EmotionWordList& words, std::span<const Tweet> corpus);

struct SelfTrainConfig {
  std::size_t k = 10;
  double threshold = 0.1;
  std::size_t max_added = 2500;

  void Validate() const;
};

struct SilverCandidate {
  Tweet tweet;
  std::vector<double> predictions;
  double spread = 0.0;          // max - min
  double proposed_label = 0.0;  // mean
  bool operator==(const SilverCandidate&) const = default;
};

// Keeps tweets whose K predictions (predictions[k][i] for tweet i) spread by
// at most cfg.threshold, labels them with the mean (summed in model order,
// then clamped into [min, max] against rounding), orders them by spread
// (stable) and keeps the first cfg.max_added.
std::vector<SilverCandidate> FilterByAgreement(
    std::span<const Tweet> silver,
    std::span<const std::vector<double>> predictions,
    const SelfTrainConfig& cfg);

// The seed of agreement model k.
inline std::uint64_t AgreementSeed(const PredictorSpec& trainer, std::size_t k) {
  return trainer.seed + k;
}

// Trains cfg.k copies of `trainer` on `train` that differ only in their seed,
// predicts every silver tweet with each and applies FilterByAgreement.
std::vector<SilverCandidate> FilterSilver(std::span<const Tweet> silver,
                                          const PredictorSpec& trainer,
                                          const FeatureSpec& features,
                                          const Dataset& train,
                                          const SelfTrainConfig& cfg);

// `train` followed by the candidates as Origin::kSilver instances.
Dataset SelfTrain(const Dataset& train,
                  std::span<const SilverCandidate> candidates);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_SEMISUP_H_
