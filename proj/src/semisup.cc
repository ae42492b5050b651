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

#include "tweetaffect/semisup.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "tweetaffect/error.h"
#include "tweetaffect/text_io.h"
#include "tweetaffect/unicode.h"

namespace tweetaffect {
namespace {

struct Counts {
  std::unordered_map<std::string, std::size_t> frequency;
  std::size_t total = 0;
};

bool IsCandidateWord(const std::string& token) {
  if (token == kUrlToken || token == kUserToken) return false;
  for (char32_t c : unicode::Decode(token)) {
    if (unicode::IsWordChar(c) && c != U'_') return true;
  }
  return false;
}

Counts CountDistinct(std::span<const Tweet> corpus) {
  std::set<std::vector<std::string>> seen;
  Counts counts;
  for (const Tweet& tweet : corpus) {
    if (!seen.insert(tweet.tokens).second) continue;
    for (const std::string& token : tweet.tokens) ++counts.frequency[token];
    counts.total += tweet.tokens.size();
  }
  return counts;
}

}  // namespace

std::vector<WordRatio> MineIndicatorWords(std::span<const Tweet> target,
                                          std::span<const Tweet> background,
                                          std::size_t top_n) {
  if (target.empty() || background.empty()) {
    throw UsageError("indicator mining needs two non-empty corpora");
  }
  const Counts t = CountDistinct(target);
  const Counts b = CountDistinct(background);
  if (t.total == 0 || b.total == 0) {
    throw UsageError("indicator mining needs corpora with tokens");
  }
  std::vector<WordRatio> ranking;
  for (const auto& [word, count] : t.frequency) {
    if (!IsCandidateWord(word)) continue;
    const auto it = b.frequency.find(word);
    const std::size_t background_count = it == b.frequency.end() ? 0 : it->second;
    const double ratio =
        (static_cast<double>(count + 1) / static_cast<double>(t.total)) /
        (static_cast<double>(background_count + 1) / static_cast<double>(b.total));
    ranking.push_back(WordRatio{word, ratio, count, background_count});
  }
  // Exact ordering by cross-multiplying the integer counts.
  const auto key = [&](const WordRatio& w) {
    return static_cast<unsigned __int128>(w.target_count + 1) * b.total;
  };
  const auto den = [&](const WordRatio& w) {
    return static_cast<unsigned __int128>(w.background_count + 1) * t.total;
  };
  std::sort(ranking.begin(), ranking.end(),
            [&](const WordRatio& x, const WordRatio& y) {
              const unsigned __int128 lhs = key(x) * den(y);
              const unsigned __int128 rhs = key(y) * den(x);
              if (lhs != rhs) return lhs > rhs;
              return x.word < y.word;
            });
  if (ranking.size() > top_n) ranking.resize(top_n);
  return ranking;
}

void SaveWordRanking(std::span<const WordRatio> ranking,
                     const std::filesystem::path& path) {
  std::string out;
  for (const WordRatio& w : ranking) {
    out += w.word + "\t" + text_io::FormatDouble(w.ratio) + "\t" +
           std::to_string(w.target_count) + "\t" +
           std::to_string(w.background_count) + "\n";
  }
  text_io::WriteFile(path, out);
}

void EmotionWordList::Add(std::string_view word, Dimension emotion) {
  if (emotion == Dimension::kValence) {
    throw UsageError("indicator words annotate emotions, not valence");
  }
  const std::string key = unicode::ToLowerUtf8(word);
  const auto [it, inserted] = emotion_of_.emplace(key, emotion);
  if (!inserted && it->second != emotion) {
    throw UsageError("word '" + key + "' is annotated with both " +
                     std::string(DimensionName(it->second)) + " and " +
                     std::string(DimensionName(emotion)));
  }
  words_[emotion].insert(key);
}

std::optional<Dimension> EmotionWordList::EmotionOf(std::string_view word) const {
  const auto it = emotion_of_.find(std::string(word));
  if (it == emotion_of_.end()) return std::nullopt;
  return it->second;
}

const std::set<std::string>& EmotionWordList::Words(Dimension emotion) const {
  static const std::set<std::string> kEmpty;
  const auto it = words_.find(emotion);
  return it == words_.end() ? kEmpty : it->second;
}

EmotionWordList LoadEmotionWords(const std::filesystem::path& path) {
  EmotionWordList list;
  const std::vector<std::string> lines = text_io::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view trimmed = text_io::Trim(lines[i]);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = text_io::Split(trimmed, '\t');
    if (fields.size() != 2) {
      throw ParseError(path.string(), i + 1, "expected word<TAB>emotion");
    }
    const std::string_view label = text_io::Trim(fields[1]);
    if (label == "discard") continue;
    try {
      const Dimension emotion = ParseDimension(label);
      list.Add(text_io::Trim(fields[0]), emotion);
    } catch (const Error& e) {
      throw ParseError(path.string(), i + 1, e.what());
    }
  }
  return list;
}

std::map<Dimension, std::vector<Tweet>> BuildSilverSets(
    const EmotionWordList& words, std::span<const Tweet> corpus) {
  std::map<Dimension, std::vector<Tweet>> sets;
  for (Dimension emotion : kEmotions) sets[emotion];
  for (const Tweet& tweet : corpus) {
    std::set<Dimension> matched;
    for (const std::string& token : tweet.tokens) {
      if (const auto emotion = words.EmotionOf(token)) matched.insert(*emotion);
    }
    for (Dimension emotion : matched) sets[emotion].push_back(tweet);
  }
  return sets;
}

void SelfTrainConfig::Validate() const {
  if (k < 2) throw UsageError("self-training needs K >= 2 agreement models");
  if (!(threshold > 0.0)) throw UsageError("agreement threshold must be positive");
}

std::vector<SilverCandidate> FilterByAgreement(
    std::span<const Tweet> silver,
    std::span<const std::vector<double>> predictions,
    const SelfTrainConfig& cfg) {
  cfg.Validate();
  if (predictions.size() != cfg.k) {
    throw UsageError("expected " + std::to_string(cfg.k) +
                     " prediction vectors, got " +
                     std::to_string(predictions.size()));
  }
  for (const auto& column : predictions) {
    if (column.size() != silver.size()) {
      throw UsageError("prediction vector length differs from the silver pool");
    }
  }
  std::vector<SilverCandidate> kept;
  for (std::size_t i = 0; i < silver.size(); ++i) {
    SilverCandidate c;
    c.tweet = silver[i];
    double sum = 0.0;
    for (const auto& column : predictions) {
      c.predictions.push_back(column[i]);
      sum += column[i];
    }
    const auto [lo, hi] =
        std::minmax_element(c.predictions.begin(), c.predictions.end());
    c.spread = *hi - *lo;
    if (c.spread > cfg.threshold) continue;
    c.proposed_label = std::clamp(sum / static_cast<double>(cfg.k), *lo, *hi);
    kept.push_back(std::move(c));
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const SilverCandidate& a, const SilverCandidate& b) {
                     return a.spread < b.spread;
                   });
  if (kept.size() > cfg.max_added) kept.resize(cfg.max_added);
  return kept;
}

std::vector<SilverCandidate> FilterSilver(std::span<const Tweet> silver,
                                          const PredictorSpec& trainer,
                                          const FeatureSpec& features,
                                          const Dataset& train,
                                          const SelfTrainConfig& cfg) {
  cfg.Validate();
  if (train.empty()) throw UsageError("self-training needs training data");
  const Matrix x_train = features.FeaturizeDataset(train);
  const std::vector<double> y_train = train.Labels();
  const Matrix x_silver = features.FeaturizeAll(silver);
  std::vector<std::vector<double>> predictions;
  for (std::size_t k = 0; k < cfg.k; ++k) {
    PredictorSpec seeded = trainer;
    seeded.seed = AgreementSeed(trainer, k);
    predictions.push_back(Train(seeded, x_train, y_train).PredictAll(x_silver));
  }
  return FilterByAgreement(silver, predictions, cfg);
}

Dataset SelfTrain(const Dataset& train,
                  std::span<const SilverCandidate> candidates) {
  Dataset out = train;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Tweet tweet = candidates[i].tweet;
    if (tweet.id.empty()) tweet.id = "silver-" + std::to_string(i + 1);
    out.Add(LabeledInstance{std::move(tweet), candidates[i].proposed_label,
                            Origin::kSilver});
  }
  return out;
}

}  // namespace tweetaffect
