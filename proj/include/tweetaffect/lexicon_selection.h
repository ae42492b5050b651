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

#ifndef TWEETAFFECT_LEXICON_SELECTION_H_
#define TWEETAFFECT_LEXICON_SELECTION_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tweetaffect/corpus.h"
#include "tweetaffect/features.h"
#include "tweetaffect/lexicons.h"
#include "tweetaffect/models.h"

namespace tweetaffect {

// Scores a feature configuration; higher is better.
using FeatureScorer = std::function<double(const FeatureSpec&)>;

struct LexiconGain {
  std::string name;
  double score = 0.0;  // base features plus this lexicon alone
  double gain = 0.0;   // score minus the base score
};

struct SelectionStep {
  std::string name;
  double score = 0.0;  // cumulative score with this lexicon added
  bool accepted = false;
};

struct SelectionResult {
  double base_score = 0.0;
  // Every candidate, in input order.
  std::vector<LexiconGain> individual;
  // Candidates with positive gain, by descending gain then name.
  std::vector<std::string> beneficial;
  std::vector<SelectionStep> steps;
  std::vector<std::shared_ptr<const Lexicon>> selected;
  double final_score = 0.0;

  std::vector<std::string> SelectedNames() const;
};

// Two phases: score each candidate on top of `base`, keep those with gain
// > 0; then add them in descending-gain order while the cumulative score
// strictly increases, stopping at the first addition that does not help.
SelectionResult ForwardSelect(
    std::span<const std::shared_ptr<const Lexicon>> candidates,
    const FeatureSpec& base, const FeatureScorer& scorer);

// Scorer = mean cross-validated Pearson of `trainer` on `data`.
SelectionResult ForwardSelect(
    std::span<const std::shared_ptr<const Lexicon>> candidates,
    const FeatureSpec& base, const PredictorSpec& trainer, const Dataset& data,
    std::size_t folds);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_LEXICON_SELECTION_H_
