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

#ifndef TWEETAFFECT_SYNTHETIC_H_
#define TWEETAFFECT_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tweetaffect/corpus.h"
#include "tweetaffect/embeddings.h"
#include "tweetaffect/lexicons.h"

namespace tweetaffect {

// A generated emotion-intensity task with known ground truth.
//
// Every word of the target language has a hidden affect score (zero for
// neutral words). A tweet's intensity is a sigmoid of the mean affect of its
// tokens plus Gaussian noise. The embedding table places affect words along a
// hidden direction; the lexicon reveals the exact scores of part of the affect
// vocabulary. Foreign-language data is drawn from the same process over a
// disjoint vocabulary and the dictionary maps it back word by word, so
// translation yields correctly labeled in-domain data. The silver pool is
// unlabeled in-domain text that contains at least one indicator word.
struct SyntheticOptions {
  std::uint64_t seed = 1;
  Dimension emotion = Dimension::kAnger;
  std::size_t train_size = 300;
  std::size_t dev_size = 200;
  std::size_t test_size = 200;
  std::size_t foreign_size = 300;
  std::size_t silver_size = 1000;
  std::size_t background_size = 1000;
  std::size_t affect_words = 80;
  std::size_t neutral_words = 160;
  std::size_t indicator_words = 12;
  std::size_t embedding_dim = 16;
  double lexicon_coverage = 0.5;
  double label_noise = 0.05;
};

struct SyntheticTask {
  explicit SyntheticTask(AffectTarget target)
      : train(target), dev(target), test(target), foreign(target) {}

  Dataset train;
  Dataset dev;
  Dataset test;
  Dataset foreign;
  std::map<std::string, std::string> dictionary;  // foreign -> target word
  std::vector<Tweet> silver;
  std::vector<Tweet> background;
  std::vector<std::string> indicator_words;
  EmbeddingTable embeddings{1};
  Lexicon lexicon{"synthlex"};
  Lexicon noise_lexicon{"noise"};
  std::map<std::string, double> affect;  // hidden word scores
};

SyntheticTask GenerateSyntheticTask(const SyntheticOptions& options);

struct SmokeSettings {
  std::size_t runs = 1;
  std::size_t agreement_models = 5;
  double threshold = 0.1;
  std::size_t max_added = 2500;
  bool select_lexicons = true;
  std::string ff_layers = "32";
  std::size_t ff_epochs = 60;
};

// Writes train/dev/test/foreign TSVs, dictionary.tsv, silver.tsv,
// background.txt, emotion_words.tsv, embeddings.txt, the two lexicons and an
// experiment.conf that runs regular, translated and silver variants.
void WriteSyntheticTask(const SyntheticTask& task,
                        const std::filesystem::path& dir,
                        std::uint64_t experiment_seed,
                        const SmokeSettings& smoke = {});

}  // namespace tweetaffect

#endif  // TWEETAFFECT_SYNTHETIC_H_
