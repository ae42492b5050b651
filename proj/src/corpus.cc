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

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

#include "tweetaffect/error.h"
#include "tweetaffect/text_io.h"
#include "tweetaffect/unicode.h"

namespace tweetaffect {
namespace {

using unicode::IsEmoji;
using unicode::IsEmojiGlue;
using unicode::IsPunctuation;
using unicode::IsWordChar;

constexpr std::array<std::string_view, 40> kEmoticons = {
    ":)",  ":-)", ":(",  ":-(", ":d",  ":-d", ";)",  ";-)", ":p",  ":-p",
    ";p",  ";-p", ":'(", ":')", ":/",  ":-/", ":\\", ":o",  ":-o", ":*",
    ":-*", "<3",  "</3", "xd",  "x-d", "=)",  "=(",  "=d",  ":]",  ":[",
    ":|",  ":-|", "^^",  "^_^", "-_-", "o_o", ":3",  "(:",  "):",  ";(",
};

class Tokenizer {
 public:
  std::vector<std::string> Run(std::string_view raw) {
    const std::u32string text = unicode::Decode(raw);
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && unicode::IsSpace(text[i])) ++i;
      const std::size_t start = i;
      while (i < text.size() && !unicode::IsSpace(text[i])) ++i;
      if (i > start) Chunk(std::u32string_view(text).substr(start, i - start));
    }
    return std::move(tokens_);
  }

 private:
  void Emit(std::u32string_view token) {
    tokens_.push_back(unicode::Encode(token));
  }

  void Chunk(std::u32string_view chunk) {
    const std::u32string lower = unicode::ToLower(chunk);
    if (IsEmoticon(unicode::Encode(lower))) {
      Emit(lower);
      return;
    }
    const std::size_t url = FindUrl(lower);
    if (url != std::u32string::npos) {
      Mixed(chunk.substr(0, url));
      tokens_.emplace_back(kUrlToken);
      return;
    }
    Mixed(chunk);
  }

  // Start of the first `(https?://|www\.)\S+` match, or npos.
  static std::size_t FindUrl(std::u32string_view lower) {
    static const std::u32string_view kPrefixes[] = {U"http://", U"https://",
                                                    U"www."};
    std::size_t best = std::u32string::npos;
    for (std::u32string_view prefix : kPrefixes) {
      std::size_t pos = lower.find(prefix);
      while (pos != std::u32string::npos) {
        if (pos + prefix.size() < lower.size()) {
          best = std::min(best, pos);
          break;
        }
        pos = lower.find(prefix, pos + 1);
      }
    }
    return best;
  }

  // Splits emoji out of a chunk; the remaining runs are plain segments.
  void Mixed(std::u32string_view chunk) {
    std::u32string segment;
    for (char32_t c : chunk) {
      if (IsEmojiGlue(c)) continue;
      if (IsEmoji(c)) {
        Segment(segment);
        segment.clear();
        Emit(std::u32string_view(&c, 1));
      } else {
        segment.push_back(c);
      }
    }
    Segment(segment);
  }

  void Punctuation(char32_t c) {
    if (c == U'@') return;
    Emit(std::u32string_view(&c, 1));
  }

  void Segment(std::u32string_view seg) {
    if (seg.empty()) return;
    std::size_t begin = 0;
    std::size_t end = seg.size();
    while (begin < end && IsPunctuation(seg[begin])) {
      const bool prefix = (seg[begin] == U'@' || seg[begin] == U'#') &&
                          begin + 1 < end && IsWordChar(seg[begin + 1]);
      if (prefix) break;
      ++begin;
    }
    while (end > begin && IsPunctuation(seg[end - 1])) --end;

    for (std::size_t k = 0; k < begin; ++k) Punctuation(seg[k]);
    const std::u32string_view core = seg.substr(begin, end - begin);
    if (!core.empty()) {
      if (core.front() == U'@') {
        tokens_.emplace_back(kUserToken);
      } else if (core == U"URL") {
        tokens_.emplace_back(kUrlToken);
      } else {
        Emit(unicode::ToLower(core));
      }
    }
    for (std::size_t k = end; k < seg.size(); ++k) Punctuation(seg[k]);
  }

  std::vector<std::string> tokens_;
};

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string SanitizeField(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

}  // namespace

std::string Tweet::JoinedTokens() const { return JoinTokens(tokens); }

bool IsEmoticon(std::string_view lowercase_chunk) {
  return std::find(kEmoticons.begin(), kEmoticons.end(), lowercase_chunk) !=
         kEmoticons.end();
}

Tweet Preprocess(std::string_view raw, std::string id) {
  Tweet tweet;
  tweet.id = std::move(id);
  tweet.raw = std::string(raw);
  tweet.tokens = Tokenizer().Run(raw);
  return tweet;
}

std::vector<Tweet> FilterCorpus(std::span<const Tweet> tweets,
                                std::size_t min_tokens) {
  std::vector<Tweet> kept;
  std::set<std::vector<std::string>> seen;
  for (const Tweet& tweet : tweets) {
    if (tweet.tokens.size() < min_tokens) continue;
    if (!seen.insert(tweet.tokens).second) continue;
    kept.push_back(tweet);
  }
  return kept;
}

std::string_view DimensionName(Dimension dimension) {
  switch (dimension) {
    case Dimension::kAnger:
      return "anger";
    case Dimension::kFear:
      return "fear";
    case Dimension::kJoy:
      return "joy";
    case Dimension::kSadness:
      return "sadness";
    case Dimension::kValence:
      return "valence";
  }
  return "unknown";
}

Dimension ParseDimension(std::string_view name) {
  for (Dimension d : {Dimension::kAnger, Dimension::kFear, Dimension::kJoy,
                      Dimension::kSadness, Dimension::kValence}) {
    if (DimensionName(d) == name) return d;
  }
  throw UsageError("unknown affect dimension '" + std::string(name) + "'");
}

std::string_view OriginName(Origin origin) {
  switch (origin) {
    case Origin::kGold:
      return "gold";
    case Origin::kTranslated:
      return "translated";
    case Origin::kSilver:
      return "silver";
  }
  return "unknown";
}

AffectTarget::AffectTarget(Dimension dimension, TaskKind task)
    : dimension_(dimension), task_(task) {}

AffectTarget AffectTarget::FromTaskId(std::string_view task_id) {
  if (task_id == "V-Reg") return {Dimension::kValence, TaskKind::kRegression};
  if (task_id == "V-Oc") return {Dimension::kValence, TaskKind::kOrdinal};
  TaskKind task;
  std::string_view rest;
  if (task_id.starts_with("EI-Reg-")) {
    task = TaskKind::kRegression;
    rest = task_id.substr(7);
  } else if (task_id.starts_with("EI-Oc-")) {
    task = TaskKind::kOrdinal;
    rest = task_id.substr(6);
  } else {
    throw UsageError("unknown task id '" + std::string(task_id) + "'");
  }
  const Dimension dimension = ParseDimension(rest);
  if (dimension == Dimension::kValence) {
    throw UsageError("valence pairs only with V-Reg/V-Oc, got '" +
                     std::string(task_id) + "'");
  }
  return {dimension, task};
}

std::string AffectTarget::TaskId() const {
  const bool ordinal = task_ == TaskKind::kOrdinal;
  if (dimension_ == Dimension::kValence) return ordinal ? "V-Oc" : "V-Reg";
  return std::string(ordinal ? "EI-Oc-" : "EI-Reg-") +
         std::string(DimensionName(dimension_));
}

int AffectTarget::min_class() const {
  return dimension_ == Dimension::kValence ? -3 : 0;
}

int AffectTarget::max_class() const { return 3; }

double NormalizeOrdinal(int class_index, int num_classes) {
  if (num_classes <= 1) return 0.0;
  return static_cast<double>(class_index) /
         static_cast<double>(num_classes - 1);
}

double AffectTarget::NormalizeClass(int class_value) const {
  if (class_value < min_class() || class_value > max_class()) {
    throw UsageError("class " + std::to_string(class_value) +
                     " outside [" + std::to_string(min_class()) + ", " +
                     std::to_string(max_class()) + "] for " + TaskId());
  }
  return NormalizeOrdinal(class_value - min_class(), num_classes());
}

int AffectTarget::ClassFromLabel(double label) const {
  const int index =
      static_cast<int>(std::lround(label * static_cast<double>(num_classes() - 1)));
  return min_class() + index;
}

void Dataset::Add(LabeledInstance instance) {
  if (!(instance.label >= 0.0 && instance.label <= 1.0)) {
    throw UsageError("label " + text_io::FormatDouble(instance.label) +
                     " of instance '" + instance.tweet.id +
                     "' outside [0, 1]");
  }
  auto& ids = ids_by_origin_[static_cast<int>(instance.origin)];
  if (!ids.insert(instance.tweet.id).second) {
    throw UsageError("duplicate instance id '" + instance.tweet.id +
                     "' within origin " +
                     std::string(OriginName(instance.origin)));
  }
  instances_.push_back(std::move(instance));
}

std::vector<double> Dataset::Labels() const {
  std::vector<double> labels;
  labels.reserve(instances_.size());
  for (const auto& instance : instances_) labels.push_back(instance.label);
  return labels;
}

std::vector<std::string> Dataset::Ids() const {
  std::vector<std::string> ids;
  ids.reserve(instances_.size());
  for (const auto& instance : instances_) ids.push_back(instance.tweet.id);
  return ids;
}

std::vector<Tweet> Dataset::Tweets() const {
  std::vector<Tweet> tweets;
  tweets.reserve(instances_.size());
  for (const auto& instance : instances_) tweets.push_back(instance.tweet);
  return tweets;
}

std::vector<TsvRow> ReadDatasetRows(const std::filesystem::path& path,
                                    TsvOptions options) {
  const std::vector<std::string> lines = text_io::ReadLines(path);
  std::vector<TsvRow> rows;
  const std::string name = path.string();
  for (std::size_t i = options.header ? 1 : 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (text_io::Trim(line).empty()) continue;
    const auto fields = text_io::Split(line, '\t');
    if (fields.size() != 4) {
      throw ParseError(name, i + 1,
                       "expected 4 tab-separated columns, found " +
                           std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(name, i + 1, "empty id");
    rows.push_back(TsvRow{i + 1, std::string(fields[0]), std::string(fields[1]),
                          std::string(text_io::Trim(fields[2])),
                          std::string(text_io::Trim(fields[3]))});
  }
  return rows;
}

double ParseLabel(std::string_view text, const AffectTarget& target) {
  if (target.is_ordinal()) {
    const std::size_t colon = text.find(':');
    const auto value = text_io::ParseInt(text.substr(0, colon));
    if (!value) {
      throw UsageError("ordinal label '" + std::string(text) +
                       "' has no integer class");
    }
    return target.NormalizeClass(static_cast<int>(*value));
  }
  const auto value = text_io::ParseDouble(text);
  if (!value) throw UsageError("label '" + std::string(text) + "' is not a number");
  if (*value < 0.0 || *value > 1.0) {
    throw UsageError("label " + std::string(text) + " outside [0, 1]");
  }
  return *value;
}

Dataset LoadDataset(const std::filesystem::path& path, AffectTarget target,
                    TsvOptions options) {
  Dataset dataset(target);
  const std::string name = path.string();
  for (TsvRow& row : ReadDatasetRows(path, options)) {
    try {
      if (ParseDimension(row.dimension) != target.dimension()) {
        throw UsageError("dimension '" + row.dimension + "' does not match " +
                         target.TaskId());
      }
      LabeledInstance instance;
      instance.label = ParseLabel(row.label, target);
      instance.tweet = Preprocess(row.text, row.id);
      instance.origin = Origin::kGold;
      dataset.Add(std::move(instance));
    } catch (const Error& e) {
      throw ParseError(name, row.line, e.what());
    }
  }
  return dataset;
}

void SaveDataset(const Dataset& dataset, const std::filesystem::path& path) {
  std::ostringstream out;
  const AffectTarget& target = dataset.target();
  for (const LabeledInstance& instance : dataset.instances()) {
    out << SanitizeField(instance.tweet.id) << '\t'
        << SanitizeField(instance.tweet.raw) << '\t'
        << DimensionName(target.dimension()) << '\t';
    if (target.is_ordinal()) {
      out << target.ClassFromLabel(instance.label);
    } else {
      out << text_io::FormatDouble(instance.label);
    }
    out << '\n';
  }
  text_io::WriteFile(path, out.str());
}

std::vector<Tweet> LoadTweets(const std::filesystem::path& path) {
  const std::vector<std::string> lines = text_io::ReadLines(path);
  std::vector<Tweet> tweets;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (text_io::Trim(lines[i]).empty()) continue;
    const auto fields = text_io::Split(lines[i], '\t');
    if (fields.size() >= 2) {
      tweets.push_back(Preprocess(fields[1], std::string(fields[0])));
    } else {
      tweets.push_back(Preprocess(lines[i], "line-" + std::to_string(i + 1)));
    }
  }
  return tweets;
}

}  // namespace tweetaffect
