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

#include <gtest/gtest.h>

#include <memory>

#include "oracles.h"
#include "test_util.h"
#include "tweetaffect/embeddings.h"
#include "tweetaffect/error.h"
#include "tweetaffect/random.h"

namespace tweetaffect {
namespace {

using ::tweetaffect::testing::TempDir;
using ::tweetaffect::testing::WriteText;

std::vector<Tweet> Tweets(std::initializer_list<const char*> texts) {
  std::vector<Tweet> out;
  int i = 0;
  for (const char* t : texts) out.push_back(Preprocess(t, "s" + std::to_string(i++)));
  return out;
}

TEST(MineIndicatorWordsTest, HandComputedRatios) {
  const std::vector<Tweet> target = Tweets({"feliz día", "feliz"});
  const std::vector<Tweet> background = Tweets({"día malo", "el día"});
  const std::vector<WordRatio> r = MineIndicatorWords(target, background);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].word, "feliz");
  EXPECT_DOUBLE_EQ(r[0].ratio, (3.0 / 3.0) / (1.0 / 4.0));
  EXPECT_EQ(r[0].target_count, 2u);
  EXPECT_EQ(r[1].word, "día");
  EXPECT_DOUBLE_EQ(r[1].ratio, (2.0 / 3.0) / (3.0 / 4.0));
  EXPECT_EQ(r[1].background_count, 2u);
}

TEST(MineIndicatorWordsTest, SkipsPlaceholdersAndPunctuationAndBreaksTies) {
  const std::vector<Tweet> target = Tweets({"@ana b a ! http://x.y 😀"});
  const std::vector<Tweet> background = Tweets({"c"});
  const std::vector<WordRatio> r = MineIndicatorWords(target, background);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].word, "a");
  EXPECT_EQ(r[1].word, "b");
  EXPECT_EQ(MineIndicatorWords(target, background, 1).size(), 1u);
}

TEST(MineIndicatorWordsProperty, DuplicatingCorporaChangesNothing) {
  Rng rng(71);
  const std::vector<std::string> vocab{"uno", "dos", "tres", "cuatro", "cinco", "seis"};
  const auto corpus = [&](std::size_t n) {
    std::vector<Tweet> out;
    for (std::size_t i = 0; i < n; ++i) {
      std::string text;
      for (std::size_t k = 1 + rng.Below(5); k > 0; --k) text += vocab[rng.Below(6)] + " ";
      out.push_back(Preprocess(text));
    }
    return out;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Tweet> target = corpus(15), background = corpus(25);
    std::vector<Tweet> doubled = target;
    doubled.insert(doubled.end(), target.begin(), target.end());
    EXPECT_EQ(MineIndicatorWords(doubled, background), MineIndicatorWords(target, background));
  }
}

TEST(EmotionWordListTest, OneEmotionPerWord) {
  EmotionWordList list;
  list.Add("furia", Dimension::kAnger);
  list.Add("furia", Dimension::kAnger);
  EXPECT_THROW(list.Add("furia", Dimension::kJoy), Error);
  EXPECT_THROW(list.Add("bien", Dimension::kValence), Error);
  EXPECT_EQ(list.EmotionOf("furia"), Dimension::kAnger);
  EXPECT_FALSE(list.EmotionOf("nada").has_value());
  EXPECT_EQ(list.size(), 1u);
  EXPECT_TRUE(list.Words(Dimension::kFear).empty());
}

TEST(EmotionWordListTest, LoadsFile) {
  TempDir dir;
  WriteText(dir / "w.tsv", "furia\tanger\nmiedo\tfear\nhola\tdiscard\n");
  const EmotionWordList list = LoadEmotionWords(dir / "w.tsv");
  EXPECT_EQ(list.size(), 2u);
  EXPECT_EQ(list.Words(Dimension::kFear), (std::set<std::string>{"miedo"}));
  WriteText(dir / "bad.tsv", "furia\tvalence\n");
  EXPECT_THROW(LoadEmotionWords(dir / "bad.tsv"), Error);
  WriteText(dir / "clash.tsv", "furia\tanger\nfuria\tjoy\n");
  EXPECT_THROW(LoadEmotionWords(dir / "clash.tsv"), Error);
}

TEST(BuildSilverSetsTest, WholeTokenMatches) {
  EmotionWordList list;
  list.Add("furia", Dimension::kAnger);
  list.Add("feliz", Dimension::kJoy);
  const std::vector<Tweet> corpus = Tweets({"qué furia", "furiaaa", "feliz y con furia", "nada"});
  const auto sets = BuildSilverSets(list, corpus);
  EXPECT_EQ(sets.size(), 4u);
  ASSERT_EQ(sets.at(Dimension::kAnger).size(), 2u);
  EXPECT_EQ(sets.at(Dimension::kAnger)[1].id, "s2");
  EXPECT_EQ(sets.at(Dimension::kJoy).size(), 1u);
  EXPECT_TRUE(sets.at(Dimension::kSadness).empty());
}

TEST(FilterByAgreementTest, HandExample) {
  const std::vector<Tweet> silver = Tweets({"a", "b", "c", "d"});
  const std::vector<std::vector<double>> p{{0.50, 0.10, 0.90, 0.30},
                                           {0.55, 0.40, 0.88, 0.31},
                                           {0.52, 0.12, 0.95, 0.32}};
  SelfTrainConfig cfg;
  cfg.k = 3;
  cfg.threshold = 0.1;
  const std::vector<SilverCandidate> kept = FilterByAgreement(silver, p, cfg);
  ASSERT_EQ(kept.size(), 3u);
  EXPECT_EQ(kept[0].tweet.id, "s3");
  EXPECT_EQ(kept[1].tweet.id, "s0");
  EXPECT_EQ(kept[2].tweet.id, "s2");
  EXPECT_NEAR(kept[1].proposed_label, (0.50 + 0.55 + 0.52) / 3, 1e-15);
  EXPECT_EQ(kept[0].predictions, (std::vector<double>{0.30, 0.31, 0.32}));
  cfg.max_added = 1;
  EXPECT_EQ(FilterByAgreement(silver, p, cfg).size(), 1u);
}

TEST(FilterByAgreementProperty, MatchesOracleAndMonotone) {
  Rng rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.Below(60), k = 2 + rng.Below(9);
    std::vector<Tweet> silver(n);
    for (std::size_t i = 0; i < n; ++i) silver[i].id = std::to_string(i);
    std::vector<std::vector<double>> p(k, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const double center = rng.Uniform();
      const double width = rng.Uniform(0, 0.3);
      for (std::size_t m = 0; m < k; ++m) {
        // Quantized so that equal spreads (ties) actually occur.
        p[m][i] = std::round((center + width * rng.Uniform(-0.5, 0.5)) * 100) / 100;
      }
    }
    SelfTrainConfig cfg;
    cfg.k = k;
    cfg.threshold = rng.Uniform(0.0, 0.2);
    cfg.max_added = rng.Below(n + 5);
    const std::vector<SilverCandidate> got = FilterByAgreement(silver, p, cfg);
    const std::vector<oracle::SilverRow> want = oracle::FilterSilver(p, cfg.threshold, cfg.max_added);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t j = 0; j < got.size(); ++j) {
      EXPECT_EQ(got[j].tweet.id, std::to_string(want[j].index));
      EXPECT_EQ(got[j].spread, want[j].spread);
      EXPECT_EQ(got[j].proposed_label, want[j].label);
    }
    SelfTrainConfig looser = cfg;
    looser.threshold += 0.05;
    EXPECT_GE(FilterByAgreement(silver, p, looser).size(), got.size());
  }
}

TEST(FilterByAgreementTest, RejectsShapeMismatch) {
  const std::vector<Tweet> silver = Tweets({"a", "b"});
  SelfTrainConfig cfg;
  cfg.k = 2;
  const std::vector<std::vector<double>> wrong{{0.1, 0.2}, {0.1}};
  EXPECT_THROW(FilterByAgreement(silver, wrong, cfg), Error);
}

TEST(SelfTrainConfigTest, Validation) {
  SelfTrainConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.k = 1;
  EXPECT_THROW(cfg.Validate(), Error);
  cfg.k = 10;
  cfg.threshold = -0.1;
  EXPECT_THROW(cfg.Validate(), Error);
}

TEST(FilterSilverTest, TrainsDistinctSeedsAndAppendsSilver) {
  auto table = std::make_shared<EmbeddingTable>(2);
  table->Add("bueno", {1.0, 0.0});
  table->Add("malo", {0.0, 1.0});
  table->Add("meh", {0.5, 0.5});
  FeatureSpec features;
  features.embeddings = table;
  const AffectTarget target(Dimension::kJoy, TaskKind::kRegression);
  Dataset train(target);
  Rng rng(73);
  for (int i = 0; i < 40; ++i) {
    const bool good = i % 2 == 0;
    train.Add({Preprocess(good ? "bueno" : "malo", "g" + std::to_string(i)),
               good ? 0.8 + 0.01 * rng.Uniform() : 0.2, Origin::kGold});
  }
  const std::vector<Tweet> silver = Tweets({"bueno bueno", "malo", "meh"});
  PredictorSpec trainer;
  trainer.kind = ModelKind::kFeedForward;
  trainer.layers = {4};
  trainer.epochs = 30;
  trainer.seed = 5;
  SelfTrainConfig cfg;
  cfg.k = 3;
  cfg.threshold = 1.0;
  const std::vector<SilverCandidate> kept = FilterSilver(silver, trainer, features, train, cfg);
  ASSERT_EQ(kept.size(), 3u);
  EXPECT_EQ(kept[0].predictions.size(), 3u);
  EXPECT_NE(kept[0].predictions[0], kept[0].predictions[1]);
  EXPECT_EQ(AgreementSeed(trainer, 2), 7u);
  EXPECT_EQ(FilterSilver(silver, trainer, features, train, cfg), kept);

  const Dataset augmented = SelfTrain(train, kept);
  ASSERT_EQ(augmented.size(), 43u);
  EXPECT_EQ(augmented[40].origin, Origin::kSilver);
  EXPECT_EQ(augmented[40].label, kept[0].proposed_label);
}

}  // namespace
}  // namespace tweetaffect
