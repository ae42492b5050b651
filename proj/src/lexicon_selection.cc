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

#include "tweetaffect/lexicon_selection.h"

#include <algorithm>
#include <set>

#include "tweetaffect/error.h"

namespace tweetaffect {

std::vector<std::string> SelectionResult::SelectedNames() const {
  std::vector<std::string> names;
  for (const auto& lexicon : selected) names.push_back(lexicon->name());
  return names;
}

SelectionResult ForwardSelect(
    std::span<const std::shared_ptr<const Lexicon>> candidates,
    const FeatureSpec& base, const FeatureScorer& scorer) {
  if (candidates.empty()) throw UsageError("no candidate lexicons");
  std::set<std::string> names;
  for (const auto& lexicon : candidates) {
    if (!names.insert(lexicon->name()).second) {
      throw UsageError("duplicate candidate lexicon '" + lexicon->name() + "'");
    }
  }

  SelectionResult result;
  result.base_score = scorer(base);
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const double score = scorer(base.WithLexicons({candidates[k]}));
    result.individual.push_back(
        LexiconGain{candidates[k]->name(), score, score - result.base_score});
    if (score - result.base_score > 0.0) order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const LexiconGain& x = result.individual[a];
    const LexiconGain& y = result.individual[b];
    if (x.gain != y.gain) return x.gain > y.gain;
    return x.name < y.name;
  });
  for (std::size_t k : order) result.beneficial.push_back(candidates[k]->name());

  double current = result.base_score;
  for (std::size_t k : order) {
    std::vector<std::shared_ptr<const Lexicon>> trial = result.selected;
    trial.push_back(candidates[k]);
    const double score = scorer(base.WithLexicons(trial));
    const bool accepted = score > current;
    result.steps.push_back(SelectionStep{candidates[k]->name(), score, accepted});
    if (!accepted) break;
    result.selected = std::move(trial);
    current = score;
  }
  result.final_score = current;
  return result;
}

SelectionResult ForwardSelect(
    std::span<const std::shared_ptr<const Lexicon>> candidates,
    const FeatureSpec& base, const PredictorSpec& trainer, const Dataset& data,
    std::size_t folds) {
  const std::vector<double> y = data.Labels();
  return ForwardSelect(candidates, base, [&](const FeatureSpec& features) {
    return CrossValidate(trainer, features.FeaturizeDataset(data), y, folds)
        .mean_score;
  });
}

}  // namespace tweetaffect
