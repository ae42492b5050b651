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

#include "tweetaffect/features.h"

namespace tweetaffect {

FeatureVector FeatureSpec::Featurize(const Tweet& tweet) const {
  std::vector<FeatureVector> blocks;
  if (embeddings) {
    blocks.push_back(FeatureVector{EmbedTweet(tweet, *embeddings),
                                   {{"emb", embeddings->dim()}}});
  }
  if (!lexicons.empty()) {
    blocks.push_back(tweetaffect::Featurize(tweet, lexicons));
  }
  if (blocks.empty()) return {};
  return ConcatFeatures(blocks);
}

Matrix FeatureSpec::FeaturizeAll(std::span<const Tweet> tweets) const {
  Matrix out(tweets.size(), Width());
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    const FeatureVector features = Featurize(tweets[i]);
    std::copy(features.values.begin(), features.values.end(),
              out.Row(i).begin());
  }
  return out;
}

Matrix FeatureSpec::FeaturizeDataset(const Dataset& dataset) const {
  Matrix out(dataset.size(), Width());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const FeatureVector features = Featurize(dataset[i].tweet);
    std::copy(features.values.begin(), features.values.end(),
              out.Row(i).begin());
  }
  return out;
}

std::size_t FeatureSpec::Width() const {
  std::size_t width = embeddings ? embeddings->dim() : 0;
  for (const auto& lexicon : lexicons) {
    width += lexicon->dimensions().size() * kStatsPerDimension;
  }
  return width;
}

FeatureSpec FeatureSpec::WithLexicons(
    std::vector<std::shared_ptr<const Lexicon>> extra) const {
  FeatureSpec out = *this;
  out.lexicons.insert(out.lexicons.end(), extra.begin(), extra.end());
  return out;
}

std::vector<std::string> FeatureSpec::LexiconNames() const {
  std::vector<std::string> names;
  for (const auto& lexicon : lexicons) names.push_back(lexicon->name());
  return names;
}

}  // namespace tweetaffect
