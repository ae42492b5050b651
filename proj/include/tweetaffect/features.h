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

#ifndef TWEETAFFECT_FEATURES_H_
#define TWEETAFFECT_FEATURES_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tweetaffect/corpus.h"
#include "tweetaffect/embeddings.h"
#include "tweetaffect/lexicons.h"
#include "tweetaffect/matrix.h"

namespace tweetaffect {

// Which resources turn a tweet into a feature vector: an optional embedding
// block ("emb") followed by one lexicon block per lexicon.
struct FeatureSpec {
  std::shared_ptr<const EmbeddingTable> embeddings;
  std::vector<std::shared_ptr<const Lexicon>> lexicons;

  FeatureVector Featurize(const Tweet& tweet) const;
  Matrix FeaturizeAll(std::span<const Tweet> tweets) const;
  Matrix FeaturizeDataset(const Dataset& dataset) const;
  std::size_t Width() const;

  FeatureSpec WithLexicons(
      std::vector<std::shared_ptr<const Lexicon>> extra) const;
  std::vector<std::string> LexiconNames() const;
};

}  // namespace tweetaffect

#endif  // TWEETAFFECT_FEATURES_H_
