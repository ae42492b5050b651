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

#include "tweetaffect/lexicons.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tweetaffect/error.h"
#include "tweetaffect/text_io.h"
#include "tweetaffect/unicode.h"

namespace tweetaffect {

void Lexicon::Set(std::string_view token, std::string dimension, double score) {
  if (!std::isfinite(score)) {
    throw UsageError("non-finite score for '" + std::string(token) + "'");
  }
  auto it = std::lower_bound(dimensions_.begin(), dimensions_.end(), dimension);
  if (it == dimensions_.end() || *it != dimension) {
    dimensions_.insert(it, dimension);
  }
  entries_[unicode::ToLowerUtf8(token)][std::move(dimension)] = score;
}

const Lexicon::Scores* Lexicon::Find(std::string_view token) const {
  const auto it = entries_.find(std::string(token));
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon LoadLexicon(const std::filesystem::path& path, std::string name) {
  const std::vector<std::string> lines = text_io::ReadLines(path);
  const std::string file = path.string();
  Lexicon lexicon(std::move(name));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (text_io::Trim(line).empty() || line.front() == '#') continue;
    const auto fields = text_io::Split(line, '\t');
    std::string_view dimension = "default";
    std::string_view score_text;
    if (fields.size() == 3) {
      dimension = text_io::Trim(fields[1]);
      score_text = fields[2];
    } else if (fields.size() == 2) {
      score_text = fields[1];
    } else {
      throw ParseError(file, i + 1, "expected 2 or 3 tab-separated columns");
    }
    const std::string_view token = text_io::Trim(fields[0]);
    if (token.empty()) throw ParseError(file, i + 1, "empty token");
    if (dimension.empty()) throw ParseError(file, i + 1, "empty dimension");
    const auto score = text_io::ParseDouble(score_text);
    if (!score) {
      throw ParseError(file, i + 1,
                       "score '" + std::string(score_text) + "' is not numeric");
    }
    lexicon.Set(token, std::string(dimension), *score);
  }
  if (lexicon.empty()) throw ParseError(file, lines.size(), "empty lexicon");
  return lexicon;
}

void SaveLexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  std::ostringstream out;
  for (const auto& [token, scores] : lexicon.entries()) {
    for (const auto& [dimension, score] : scores) {
      out << token << '\t' << dimension << '\t' << text_io::FormatDouble(score)
          << '\n';
    }
  }
  text_io::WriteFile(path, out.str());
}

std::vector<LexiconStats> LexiconBlockStats(const Tweet& tweet,
                                            const Lexicon& lexicon) {
  const auto& dims = lexicon.dimensions();
  std::vector<LexiconStats> stats(dims.size());
  for (const std::string& token : tweet.tokens) {
    const Lexicon::Scores* scores = lexicon.Find(token);
    if (scores == nullptr) continue;
    for (const auto& [dimension, score] : *scores) {
      const auto d = static_cast<std::size_t>(
          std::lower_bound(dims.begin(), dims.end(), dimension) - dims.begin());
      LexiconStats& s = stats[d];
      s.max_score = s.match_count == 0 ? score : std::max(s.max_score, score);
      s.sum += score;
      s.last_token_score = score;
      ++s.match_count;
    }
  }
  return stats;
}

FeatureVector Featurize(
    const Tweet& tweet,
    std::span<const std::shared_ptr<const Lexicon>> lexicons) {
  if (lexicons.empty()) throw UsageError("featurize needs at least one lexicon");
  FeatureVector out;
  for (const auto& lexicon : lexicons) {
    const std::vector<LexiconStats> stats = LexiconBlockStats(tweet, *lexicon);
    for (std::size_t d = 0; d < stats.size(); ++d) {
      const LexiconStats& s = stats[d];
      out.values.insert(out.values.end(),
                        {s.sum, static_cast<double>(s.match_count), s.max_score,
                         s.last_token_score});
      out.layout.emplace_back(
          "lex:" + lexicon->name() + ":" + lexicon->dimensions()[d],
          kStatsPerDimension);
    }
  }
  return out;
}

}  // namespace tweetaffect
