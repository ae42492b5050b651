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

#ifndef TWEETAFFECT_CORPUS_H_
#define TWEETAFFECT_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace tweetaffect {

// Replacement tokens for links and user mentions.
inline constexpr std::string_view kUrlToken = "URL";
inline constexpr std::string_view kUserToken = "@username";

struct Tweet {
  std::string id;
  std::string raw;
  std::vector<std::string> tokens;

  // Tokens joined with single spaces; preprocessing this yields `tokens`.
  std::string JoinedTokens() const;

  bool operator==(const Tweet&) const = default;
};

// Tokenizes tweet text:
//   - whitespace split;
//   - `(https?://|www\.)\S+` inside a chunk becomes the token "URL";
//   - `@name` becomes "@username" (a lone '@' is dropped);
//   - a chunk that is a known emoticon such as ":)" is kept whole;
//   - each emoji code point is its own token, joiners/selectors dropped;
//   - leading and trailing punctuation detaches one character per token,
//     `#hashtag` and `@mention` prefixes stay attached;
//   - everything else is lowercased.
Tweet Preprocess(std::string_view raw, std::string id = {});

bool IsEmoticon(std::string_view lowercase_chunk);

// Keeps tweets with at least `min_tokens` tokens, dropping later copies of an
// identical token sequence. Order preserving.
std::vector<Tweet> FilterCorpus(std::span<const Tweet> tweets,
                                std::size_t min_tokens);

enum class Dimension { kAnger, kFear, kJoy, kSadness, kValence };
enum class TaskKind { kRegression, kOrdinal };
enum class Origin { kGold, kTranslated, kSilver };

std::string_view DimensionName(Dimension dimension);
Dimension ParseDimension(std::string_view name);
std::string_view OriginName(Origin origin);

inline constexpr Dimension kEmotions[] = {Dimension::kAnger, Dimension::kFear,
                                          Dimension::kJoy, Dimension::kSadness};

class AffectTarget {
 public:
  AffectTarget(Dimension dimension, TaskKind task);

  // "EI-Reg-anger", "EI-Oc-joy", "V-Reg", "V-Oc".
  static AffectTarget FromTaskId(std::string_view task_id);
  std::string TaskId() const;

  Dimension dimension() const { return dimension_; }
  TaskKind task() const { return task_; }
  bool is_ordinal() const { return task_ == TaskKind::kOrdinal; }

  // Ordinal class range: 0..3 for emotion intensity, -3..3 for valence.
  int min_class() const;
  int max_class() const;
  int num_classes() const { return max_class() - min_class() + 1; }

  // Maps a raw class value onto the [0,1] grid; throws outside the range.
  double NormalizeClass(int class_value) const;
  int ClassFromLabel(double label) const;

  bool operator==(const AffectTarget&) const = default;

 private:
  Dimension dimension_;
  TaskKind task_;
};

// Class index k of n ordered classes maps to k/(n-1); one class maps to 0.
double NormalizeOrdinal(int class_index, int num_classes);

struct LabeledInstance {
  Tweet tweet;
  double label = 0.0;
  Origin origin = Origin::kGold;

  bool operator==(const LabeledInstance&) const = default;
};

class Dataset {
 public:
  explicit Dataset(AffectTarget target) : target_(target) {}

  // Throws on a label outside [0,1] or an id repeated within its origin.
  void Add(LabeledInstance instance);

  const AffectTarget& target() const { return target_; }
  const std::vector<LabeledInstance>& instances() const { return instances_; }
  std::size_t size() const { return instances_.size(); }
  bool empty() const { return instances_.empty(); }
  const LabeledInstance& operator[](std::size_t i) const {
    return instances_[i];
  }

  std::vector<double> Labels() const;
  std::vector<std::string> Ids() const;
  std::vector<Tweet> Tweets() const;

  bool operator==(const Dataset& other) const {
    return target_ == other.target_ && instances_ == other.instances_;
  }

 private:
  AffectTarget target_;
  std::vector<LabeledInstance> instances_;
  std::unordered_set<std::string> ids_by_origin_[3];
};

// One parsed row of the four-column dataset TSV. `label` is the raw text of
// the label column.
struct TsvRow {
  std::size_t line = 0;
  std::string id;
  std::string text;
  std::string dimension;
  std::string label;
};

struct TsvOptions {
  bool header = false;
};

std::vector<TsvRow> ReadDatasetRows(const std::filesystem::path& path,
                                    TsvOptions options = {});

// Parses "0.479" for regression or "2" / "2: moderate intensity" for ordinal.
double ParseLabel(std::string_view text, const AffectTarget& target);

Dataset LoadDataset(const std::filesystem::path& path, AffectTarget target,
                    TsvOptions options = {});

// Writes raw text; ordinal labels are written back as class values so that
// loading the file reproduces the dataset exactly.
void SaveDataset(const Dataset& dataset, const std::filesystem::path& path);

// Silver corpus: one tweet per line, or dataset TSV rows (label ignored).
std::vector<Tweet> LoadTweets(const std::filesystem::path& path);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_CORPUS_H_
