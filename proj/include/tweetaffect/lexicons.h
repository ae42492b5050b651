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

#ifndef TWEETAFFECT_LEXICONS_H_
#define TWEETAFFECT_LEXICONS_H_

#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tweetaffect/corpus.h"
#include "tweetaffect/embeddings.h"

namespace tweetaffect {

// Token -> (dimension tag -> score). Tokens are lowercase.
class Lexicon {
 public:
  using Scores = std::map<std::string, double>;

  explicit Lexicon(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  // Lowercases the token; a repeated (token, dimension) overwrites.
  void Set(std::string_view token, std::string dimension, double score);

  const Scores* Find(std::string_view token) const;
  const std::map<std::string, Scores>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Sorted dimension tags; fixes the feature layout.
  const std::vector<std::string>& dimensions() const { return dimensions_; }

  bool operator==(const Lexicon&) const = default;

 private:
  std::string name_;
  std::map<std::string, Scores> entries_;
  std::vector<std::string> dimensions_;
};

// `token<TAB>dimension<TAB>score` or `token<TAB>score` (dimension
// "default"); '#' comment lines and blank lines skipped.
Lexicon LoadLexicon(const std::filesystem::path& path, std::string name);
void SaveLexicon(const Lexicon& lexicon, const std::filesystem::path& path);

// Per (lexicon, dimension) aggregate over the tweet's tokens.
struct LexiconStats {
  double sum = 0.0;
  int match_count = 0;
  double max_score = 0.0;
  double last_token_score = 0.0;  // score of the last matching token
};

inline constexpr std::size_t kStatsPerDimension = 4;

std::vector<LexiconStats> LexiconBlockStats(const Tweet& tweet,
                                            const Lexicon& lexicon);

// One block of [sum, count, max, last] per dimension, per lexicon, in the
// given order. Layout entries are named "lex:<lexicon>:<dimension>".
FeatureVector Featurize(const Tweet& tweet,
                        std::span<const std::shared_ptr<const Lexicon>> lexicons);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_LEXICONS_H_
