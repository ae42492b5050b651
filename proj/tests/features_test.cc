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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "test_util.h"
#include "tweetaffect/corpus.h"
#include "tweetaffect/embeddings.h"
#include "tweetaffect/error.h"
#include "tweetaffect/features.h"
#include "tweetaffect/lexicons.h"
#include "tweetaffect/random.h"

namespace tweetaffect {
namespace {

using ::tweetaffect::testing::TempDir;
using ::tweetaffect::testing::WriteText;

Tweet FromTokens(std::vector<std::string> tokens) {
  Tweet t;
  t.tokens = std::move(tokens);
  return t;
}

TEST(LexiconTest, LoadsRows) {
  TempDir dir;
  WriteText(dir / "l.tsv", "# comment\nfeliz\tjoy\t0.8\ntriste\tsadness\t0.9\n\n");
  const Lexicon lex = LoadLexicon(dir / "l.tsv", "l");
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.dimensions(), (std::vector<std::string>{"joy", "sadness"}));
  ASSERT_NE(lex.Find("feliz"), nullptr);
  EXPECT_DOUBLE_EQ(lex.Find("feliz")->at("joy"), 0.8);
}

TEST(LexiconTest, LastDuplicateWins) {
  TempDir dir;
  WriteText(dir / "l.tsv", "bien\tpos\t0.5\nbien\tpos\t0.7\n");
  const Lexicon lex = LoadLexicon(dir / "l.tsv", "l");
  EXPECT_EQ(lex.size(), 1u);
  EXPECT_DOUBLE_EQ(lex.Find("bien")->at("pos"), 0.7);
}

TEST(LexiconTest, TwoColumnRowsUseDefaultDimension) {
  TempDir dir;
  WriteText(dir / "l.tsv", "Bien\t0.5\n");
  const Lexicon lex = LoadLexicon(dir / "l.tsv", "l");
  ASSERT_NE(lex.Find("bien"), nullptr);
  EXPECT_DOUBLE_EQ(lex.Find("bien")->at("default"), 0.5);
}

TEST(LexiconTest, EmptyAndMalformedFiles) {
  TempDir dir;
  WriteText(dir / "empty.tsv", "# nothing\n");
  try {
    LoadLexicon(dir / "empty.tsv", "e");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("empty lexicon"), std::string::npos);
  }
  WriteText(dir / "bad.tsv", "a\tb\tnot-a-number\n");
  EXPECT_THROW(LoadLexicon(dir / "bad.tsv", "b"), Error);
  EXPECT_THROW(LoadLexicon(dir / "missing.tsv", "m"), Error);
}

TEST(LexiconTest, SaveLoadRoundTrip) {
  TempDir dir;
  Lexicon lex("x");
  lex.Set("Hola", "pos", 0.25);
  lex.Set("hola", "neg", -1e-17);
  lex.Set("adiós", "neg", 0.1);
  SaveLexicon(lex, dir / "x.tsv");
  EXPECT_EQ(LoadLexicon(dir / "x.tsv", "x"), lex);
}

TEST(LexiconFeaturesTest, HandEvaluatedBlocks) {
  auto lex = std::make_shared<Lexicon>("l");
  lex->Set("feliz", "joy", 0.8);
  const std::vector<std::shared_ptr<const Lexicon>> lexicons = {lex};

  const FeatureVector one = Featurize(FromTokens({"muy", "feliz"}), lexicons);
  EXPECT_EQ(one.values, (std::vector<double>{0.8, 1.0, 0.8, 0.8}));
  ASSERT_EQ(one.layout.size(), 1u);
  EXPECT_EQ(one.layout[0].first, "lex:l:joy");
  EXPECT_EQ(one.layout[0].second, kStatsPerDimension);

  const FeatureVector none = Featurize(FromTokens({"nada"}), lexicons);
  EXPECT_EQ(none.values, (std::vector<double>{0, 0, 0, 0}));

  const FeatureVector two = Featurize(FromTokens({"feliz", "feliz"}), lexicons);
  EXPECT_DOUBLE_EQ(two.values[0], 1.6);
  EXPECT_EQ(two.values[1], 2.0);
  EXPECT_EQ(two.values[2], 0.8);
  EXPECT_EQ(two.values[3], 0.8);
}

TEST(LexiconFeaturesTest, LastMatchAndNegativeMax) {
  auto lex = std::make_shared<Lexicon>("l");
  lex->Set("mal", "pol", -0.5);
  lex->Set("peor", "pol", -0.9);
  const std::vector<std::shared_ptr<const Lexicon>> lexicons = {lex};
  const FeatureVector v = Featurize(FromTokens({"mal", "y", "peor", "."}), lexicons);
  EXPECT_DOUBLE_EQ(v.values[0], -1.4);
  EXPECT_EQ(v.values[1], 2.0);
  EXPECT_EQ(v.values[2], -0.5);
  EXPECT_EQ(v.values[3], -0.9);
}

TEST(LexiconFeaturesProperty, BlockStatsMatchRecount) {
  Rng rng(5);
  auto lex = std::make_shared<Lexicon>("r");
  const std::vector<std::string> vocab = {"a", "b", "c", "d", "e", "f"};
  for (const std::string& w : vocab) {
    if (rng.Bernoulli(0.6)) lex->Set(w, "x", rng.Uniform(-1, 1));
  }
  lex->Set("a", "y", 0.3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> tokens;
    for (std::size_t i = rng.Below(10); i > 0; --i) {
      tokens.push_back(vocab[rng.Below(vocab.size())]);
    }
    const std::vector<LexiconStats> stats = LexiconBlockStats(FromTokens(tokens), *lex);
    ASSERT_EQ(stats.size(), lex->dimensions().size());
    for (std::size_t d = 0; d < stats.size(); ++d) {
      const std::string& dim = lex->dimensions()[d];
      double sum = 0.0;
      int count = 0;
      double max = -INFINITY;
      double last = 0.0;
      for (const std::string& t : tokens) {
        const Lexicon::Scores* s = lex->Find(t);
        if (s == nullptr || !s->contains(dim)) continue;
        const double score = s->at(dim);
        sum += score;
        ++count;
        max = std::max(max, score);
        last = score;
      }
      EXPECT_DOUBLE_EQ(stats[d].sum, sum);
      EXPECT_EQ(stats[d].match_count, count);
      EXPECT_EQ(stats[d].max_score, count ? max : 0.0);
      EXPECT_EQ(stats[d].last_token_score, last);
    }
  }
}

TEST(EmbeddingsTest, LoadsAndFilters) {
  TempDir dir;
  WriteText(dir / "e.txt", "2 3\nhola 1 2 3\nmundo 0.5 -1 0\n");
  const EmbeddingTable t = LoadEmbeddings(dir / "e.txt");
  EXPECT_EQ(t.dim(), 3u);
  EXPECT_EQ(t.size(), 2u);
  ASSERT_NE(t.Find("mundo"), nullptr);
  EXPECT_EQ(t.Find("mundo")[1], -1.0);
  EXPECT_EQ(t.Find("nada"), nullptr);

  std::string big;
  for (int i = 0; i < 99; ++i) big += "w" + std::to_string(i) + " 1 1\n";
  big += "hola 2 2\n";
  WriteText(dir / "big.txt", big);
  const EmbeddingTable filtered =
      LoadEmbeddings(dir / "big.txt", std::unordered_set<std::string>{"hola"});
  EXPECT_EQ(filtered.size(), 1u);
  EXPECT_EQ(filtered.Find("hola")[0], 2.0);
}

TEST(EmbeddingsTest, WrongWidthNamesLine) {
  TempDir dir;
  WriteText(dir / "e.txt", "a 1 2 3\nb 1 2\n");
  try {
    LoadEmbeddings(dir / "e.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
}

TEST(EmbeddingsTest, SaveLoadRoundTrip) {
  TempDir dir;
  EmbeddingTable t(4);
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    t.Add("w" + std::to_string(i),
          {rng.Normal(), rng.Normal(), rng.Normal(), rng.Normal() * 1e-12});
  }
  SaveEmbeddings(t, dir / "e.txt");
  const EmbeddingTable back = LoadEmbeddings(dir / "e.txt");
  ASSERT_EQ(back.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(back.tokens()[i], t.tokens()[i]);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(back.Vector(i)[k], t.Vector(i)[k]);
  }
}

TEST(EmbedTweetTest, MeanAndFallbacks) {
  EmbeddingTable t(2);
  t.Add("a", {1, 0});
  t.Add("b", {0, 1});
  EXPECT_EQ(EmbedTweet(FromTokens({"a", "b"}), t), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(EmbedTweet(FromTokens({"x", "y"}), t), (std::vector<double>{0, 0}));
  EXPECT_EQ(EmbedTweet(FromTokens({"b", "zzz"}), t), (std::vector<double>{0, 1}));
  EXPECT_EQ(EmbedTweet(FromTokens({}), t), (std::vector<double>{0, 0}));
}

TEST(ConcatFeaturesTest, Layout) {
  const FeatureVector a{{1, 2}, {{"a", 2}}};
  const FeatureVector b{{3}, {{"b", 1}}};
  const FeatureVector ab = ConcatFeatures(std::vector<FeatureVector>{a, b});
  EXPECT_EQ(ab.values, (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(ConcatFeatures(std::vector<FeatureVector>{a}), a);
  EXPECT_THROW(ConcatFeatures(std::vector<FeatureVector>{}), Error);
}

TEST(FeatureSpecTest, EmbeddingThenLexiconBlocks) {
  FeatureSpec spec;
  auto table = std::make_shared<EmbeddingTable>(3);
  table->Add("feliz", {1, 2, 3});
  spec.embeddings = table;
  auto lex = std::make_shared<Lexicon>("nrc");
  lex->Set("feliz", "joy", 0.5);
  spec.lexicons = {lex};
  const FeatureVector v = spec.Featurize(Preprocess("Feliz!"));
  EXPECT_EQ(v.width(), 7u);
  EXPECT_EQ(spec.Width(), 7u);
  ASSERT_EQ(v.layout.size(), 2u);
  EXPECT_EQ(v.layout[0], (std::pair<std::string, std::size_t>{"emb", 3}));
  EXPECT_EQ(v.layout[1], (std::pair<std::string, std::size_t>{"lex:nrc:joy", 4}));
  EXPECT_EQ(v.values, (std::vector<double>{1, 2, 3, 0.5, 1, 0.5, 0.5}));
  EXPECT_EQ(spec.LexiconNames(), (std::vector<std::string>{"nrc"}));

  const Matrix m = spec.FeaturizeAll(std::vector<Tweet>{Preprocess("feliz"),
                                                        Preprocess("nada")});
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(1, 0), 0.0);
}

}  // namespace
}  // namespace tweetaffect
