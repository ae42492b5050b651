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

#include "tweetaffect/corpus.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "test_util.h"
#include "tweetaffect/error.h"
#include "tweetaffect/random.h"
#include "tweetaffect/text_io.h"

namespace tweetaffect {
namespace {

using ::tweetaffect::testing::TempDir;
using ::tweetaffect::testing::WriteText;
using Tokens = std::vector<std::string>;

TEST(PreprocessTest, ReplacesLinksAndLowercases) {
  EXPECT_EQ(Preprocess("Visita https://t.co/abc YA").tokens,
            (Tokens{"visita", "URL", "ya"}));
}

TEST(PreprocessTest, EmptyInputGivesNoTokens) {
  EXPECT_TRUE(Preprocess("").tokens.empty());
  EXPECT_TRUE(Preprocess("   \t ").tokens.empty());
}

TEST(PreprocessTest, MentionsAndEmojiRuns) {
  EXPECT_EQ(Preprocess("hola @maria \U0001F600\U0001F600").tokens,
            (Tokens{"hola", "@username", "\U0001F600", "\U0001F600"}));
}

TEST(PreprocessTest, KeepsIdAndRawText) {
  const Tweet t = Preprocess("Hola!", "t-1");
  EXPECT_EQ(t.id, "t-1");
  EXPECT_EQ(t.raw, "Hola!");
  EXPECT_EQ(t.JoinedTokens(), "hola !");
}

TEST(PreprocessTest, FixtureFile) {
  const auto lines = text_io::ReadLines(std::string(TWEETAFFECT_TEST_DATA_DIR) +
                                        "/tokenizer_cases.tsv");
  ASSERT_EQ(lines.size(), 26u);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = text_io::Split(lines[i], '\t');
    ASSERT_EQ(fields.size(), 2u) << "line " << i + 1;
    Tokens expected;
    for (std::string_view t : text_io::SplitWhitespace(fields[1])) {
      expected.emplace_back(t);
    }
    EXPECT_EQ(Preprocess(fields[0]).tokens, expected) << "line " << i + 1;
  }
}

// Random tweets built from words, mentions, links, hashtags, emoji and
// punctuation.
std::string RandomTweet(Rng& rng) {
  static const char* const kPieces[] = {
      "Hola", "MUNDO", "día", "Ñu", "@ana", "@Pepe_1", "https://t.co/Ab1",
      "www.x.es/y", "#Lunes", "#feliz!", "😀", "😀😡", "❤️", "!!", "¿qué?",
      ":)", "xD", "<3", "(bien)", "no...", "don't", "@", "#", "a,b", "URL",
      "\"cita\"", "👍🏽", "fin."};
  std::string text;
  const std::size_t n = 1 + rng.Below(12);
  for (std::size_t i = 0; i < n; ++i) {
    if (!text.empty()) text += rng.Bernoulli(0.2) ? "  " : " ";
    text += kPieces[rng.Below(std::size(kPieces))];
    if (rng.Bernoulli(0.15)) text += kPieces[rng.Below(std::size(kPieces))];
  }
  return text;
}

TEST(PreprocessProperty, IdempotentOnOwnOutput) {
  Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Tweet once = Preprocess(RandomTweet(rng));
    const Tweet twice = Preprocess(once.JoinedTokens());
    ASSERT_EQ(twice.tokens, once.tokens) << once.raw;
  }
}

TEST(PreprocessProperty, TokensAreNonEmptyAndSpaceFree) {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    for (const std::string& token : Preprocess(RandomTweet(rng)).tokens) {
      ASSERT_FALSE(token.empty());
      ASSERT_EQ(token.find(' '), std::string::npos);
      ASSERT_EQ(token.find("http"), std::string::npos) << token;
      if (token != kUrlToken) {
        ASSERT_EQ(token, text_io::Trim(token));
      }
    }
  }
}

TEST(PreprocessProperty, MentionsBecomePlaceholder) {
  Rng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string name = "user" + std::to_string(rng.Below(100000));
    const Tweet t = Preprocess("hey @" + name + " ok");
    ASSERT_EQ(t.tokens, (Tokens{"hey", "@username", "ok"}));
  }
}

TEST(FilterCorpusTest, DropsShortAndDuplicate) {
  const auto tweet = [](std::size_t n, const std::string& word) {
    std::string text;
    for (std::size_t i = 0; i < n; ++i) text += word + " ";
    return Preprocess(text);
  };
  const std::vector<Tweet> tweets = {tweet(12, "a"), tweet(10, "b"), tweet(10, "b"),
                                     tweet(9, "c"), tweet(11, "d")};
  const std::vector<Tweet> kept = FilterCorpus(tweets, 10);
  ASSERT_EQ(kept.size(), 3u);
  EXPECT_EQ(kept[0].tokens.size(), 12u);
  EXPECT_EQ(kept[1].tokens.size(), 10u);
  EXPECT_EQ(kept[2].tokens.size(), 11u);
  EXPECT_TRUE(FilterCorpus({}, 10).empty());
}

TEST(FilterCorpusTest, ShortDuplicatesAreDroppedEntirely) {
  const std::vector<Tweet> tweets = {Preprocess("uno dos"), Preprocess("uno dos"),
                                     Preprocess("a b c d e f g h i j k l")};
  const std::vector<Tweet> kept = FilterCorpus(tweets, 10);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].tokens.size(), 12u);
}

TEST(AffectTargetTest, TaskIds) {
  for (const char* id : {"EI-Reg-anger", "EI-Oc-joy", "V-Reg", "V-Oc"}) {
    EXPECT_EQ(AffectTarget::FromTaskId(id).TaskId(), id);
  }
  EXPECT_THROW(AffectTarget::FromTaskId("EI-Reg-valence"), Error);
  EXPECT_THROW(AffectTarget::FromTaskId("nope"), Error);
}

TEST(AffectTargetTest, OrdinalNormalization) {
  const AffectTarget ei = AffectTarget::FromTaskId("EI-Oc-anger");
  EXPECT_DOUBLE_EQ(ei.NormalizeClass(2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(ei.NormalizeClass(0), 0.0);
  EXPECT_DOUBLE_EQ(ei.NormalizeClass(3), 1.0);
  EXPECT_THROW(ei.NormalizeClass(4), Error);
  const AffectTarget v = AffectTarget::FromTaskId("V-Oc");
  EXPECT_EQ(v.num_classes(), 7);
  EXPECT_DOUBLE_EQ(v.NormalizeClass(-3), 0.0);
  EXPECT_DOUBLE_EQ(v.NormalizeClass(0), 0.5);
  for (int c = v.min_class(); c <= v.max_class(); ++c) {
    EXPECT_EQ(v.ClassFromLabel(v.NormalizeClass(c)), c);
  }
  EXPECT_DOUBLE_EQ(NormalizeOrdinal(0, 1), 0.0);
}

TEST(ParseLabelTest, RegressionAndOrdinal) {
  EXPECT_DOUBLE_EQ(ParseLabel("0.479", AffectTarget::FromTaskId("EI-Reg-fear")), 0.479);
  EXPECT_DOUBLE_EQ(
      ParseLabel("2: moderate amount of joy can be inferred",
                 AffectTarget::FromTaskId("EI-Oc-joy")),
      2.0 / 3.0);
  EXPECT_THROW(ParseLabel("1.5", AffectTarget::FromTaskId("EI-Reg-fear")), Error);
  EXPECT_THROW(ParseLabel("x", AffectTarget::FromTaskId("EI-Oc-joy")), Error);
}

TEST(DatasetTest, LoadsThreeRows) {
  TempDir dir;
  WriteText(dir / "d.tsv",
            "1\tEstoy FURIOSO @jefe\tanger\t0.479\n"
            "2\tqué rabia https://t.co/x\tanger\t0.8\n"
            "3\tnada\tanger\t0.1\n");
  const Dataset d =
      LoadDataset(dir / "d.tsv", AffectTarget::FromTaskId("EI-Reg-anger"));
  ASSERT_EQ(d.size(), 3u);
  EXPECT_DOUBLE_EQ(d[0].label, 0.479);
  EXPECT_EQ(d[0].tweet.tokens, (Tokens{"estoy", "furioso", "@username"}));
  EXPECT_EQ(d[1].tweet.tokens, (Tokens{"qué", "rabia", "URL"}));
  EXPECT_EQ(d[2].origin, Origin::kGold);
  EXPECT_EQ(d.Ids(), (std::vector<std::string>{"1", "2", "3"}));
}

TEST(DatasetTest, HeaderAndOrdinalRoundTrip) {
  TempDir dir;
  WriteText(dir / "d.tsv",
            "ID\tTweet\tAffect Dimension\tIntensity Class\n"
            "a\tuno\tjoy\t0: no joy\n"
            "b\tdos\tjoy\t3: high joy\n");
  const AffectTarget target = AffectTarget::FromTaskId("EI-Oc-joy");
  const Dataset d = LoadDataset(dir / "d.tsv", target, {true});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d[1].label, 1.0);
  SaveDataset(d, dir / "out.tsv");
  EXPECT_EQ(LoadDataset(dir / "out.tsv", target), d);
}

TEST(DatasetTest, ErrorsNameTheLine) {
  TempDir dir;
  WriteText(dir / "d.tsv", "1\tok\tanger\t0.5\n2\tbroken row\tanger\n");
  try {
    LoadDataset(dir / "d.tsv", AffectTarget::FromTaskId("EI-Reg-anger"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.exit_code(), 2);
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
  WriteText(dir / "w.tsv", "1\tok\tfear\t0.5\n");
  EXPECT_THROW(LoadDataset(dir / "w.tsv", AffectTarget::FromTaskId("EI-Reg-anger")),
               Error);
  WriteText(dir / "r.tsv", "1\tok\tanger\t0.5\n1\tagain\tanger\t0.4\n");
  EXPECT_THROW(LoadDataset(dir / "r.tsv", AffectTarget::FromTaskId("EI-Reg-anger")),
               Error);
}

TEST(DatasetTest, MissingFileIsIoError) {
  try {
    LoadDataset("/nonexistent/d.tsv", AffectTarget::FromTaskId("V-Reg"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.exit_code(), 3);
  }
}

TEST(DatasetTest, LoadTweetsAcceptsPlainAndTsv) {
  TempDir dir;
  WriteText(dir / "plain.txt", "hola mundo\n\nOtro TWEET\n");
  const std::vector<Tweet> plain = LoadTweets(dir / "plain.txt");
  ASSERT_EQ(plain.size(), 2u);
  EXPECT_EQ(plain[1].tokens, (Tokens{"otro", "tweet"}));
  WriteText(dir / "rows.tsv", "x1\thola mundo\tanger\tNONE\n");
  const std::vector<Tweet> rows = LoadTweets(dir / "rows.tsv");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].id, "x1");
}

TEST(DatasetTest, SaveLoadRoundTripRegression) {
  TempDir dir;
  Dataset d(AffectTarget::FromTaskId("V-Reg"));
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    d.Add({Preprocess("tweet " + std::to_string(i) + " :)", "id" + std::to_string(i)),
           rng.Uniform(), Origin::kGold});
  }
  SaveDataset(d, dir / "v.tsv");
  EXPECT_EQ(LoadDataset(dir / "v.tsv", d.target()), d);
}

}  // namespace
}  // namespace tweetaffect
