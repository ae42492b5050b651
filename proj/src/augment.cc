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

#include "tweetaffect/augment.h"

#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include "tweetaffect/error.h"
#include "tweetaffect/text_io.h"
#include "tweetaffect/unicode.h"

namespace tweetaffect {
namespace {

// Runs `fn(i)` for i in [0, n) on up to `workers` threads. Each slot of the
// returned vector holds the result or the error message for that index.
struct Slot {
  std::optional<std::string> value;
  std::string error;
};

template <typename Fn>
std::vector<Slot> RunIndexed(std::size_t n, std::size_t workers, Fn fn) {
  std::vector<Slot> slots(n);
  auto work = [&](std::size_t i) {
    try {
      slots[i].value = fn(i);
    } catch (const std::exception& e) {
      slots[i].error = e.what();
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return slots;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) work(i);
    });
  }
  for (std::thread& t : threads) t.join();
  return slots;
}

void CheckSkipRate(std::size_t skipped, std::size_t total,
                   std::string_view what) {
  if (2 * skipped > total) {
    throw ComputationError("translation failed for " + std::to_string(skipped) +
                           " of " + std::to_string(total) + " " +
                           std::string(what) + "; aborting");
  }
}

}  // namespace

std::string IdentityTranslator::Translate(std::string_view text,
                                          std::string_view /*source*/,
                                          std::string_view /*target*/) const {
  return std::string(text);
}

DictionaryTranslator::DictionaryTranslator(
    std::map<std::string, std::string> mapping)
    : mapping_(std::move(mapping)) {}

DictionaryTranslator DictionaryTranslator::Load(
    const std::filesystem::path& path) {
  std::map<std::string, std::string> mapping;
  const std::vector<std::string> lines = text_io::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view trimmed = text_io::Trim(lines[i]);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = text_io::Split(lines[i], '\t');
    if (fields.size() != 2 || text_io::Trim(fields[0]).empty()) {
      throw ParseError(path.string(), i + 1, "expected source<TAB>target");
    }
    mapping[std::string(text_io::Trim(fields[0]))] =
        std::string(text_io::Trim(fields[1]));
  }
  return DictionaryTranslator(std::move(mapping));
}

const std::string* DictionaryTranslator::Lookup(std::string_view token) const {
  if (auto it = mapping_.find(std::string(token)); it != mapping_.end()) {
    return &it->second;
  }
  const std::string lower = unicode::ToLowerUtf8(token);
  if (auto it = mapping_.find(lower); it != mapping_.end()) return &it->second;
  return nullptr;
}

std::string DictionaryTranslator::TranslateToken(std::string_view token) const {
  if (const std::string* hit = Lookup(token)) return *hit;
  const std::u32string cps = unicode::Decode(token);
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && unicode::IsPunctuation(cps[begin])) ++begin;
  while (end > begin && unicode::IsPunctuation(cps[end - 1])) --end;
  if (begin == 0 && end == cps.size()) return std::string(token);
  if (begin == end) return std::string(token);
  const std::string core =
      unicode::Encode(std::u32string_view(cps).substr(begin, end - begin));
  const std::string* hit = Lookup(core);
  if (hit == nullptr) return std::string(token);
  return unicode::Encode(std::u32string_view(cps).substr(0, begin)) + *hit +
         unicode::Encode(std::u32string_view(cps).substr(end));
}

std::string DictionaryTranslator::Translate(std::string_view text,
                                            std::string_view /*source*/,
                                            std::string_view /*target*/) const {
  std::string out;
  for (std::string_view token : text_io::SplitWhitespace(text)) {
    if (!out.empty()) out += ' ';
    out += TranslateToken(token);
  }
  return out;
}

TranslationOutcome TranslateDataset(const Dataset& data,
                                    const Translator& translator,
                                    const TranslateOptions& options) {
  const std::vector<Slot> slots =
      RunIndexed(data.size(), options.workers, [&](std::size_t i) {
        return translator.Translate(data[i].tweet.raw, options.source,
                                    options.target);
      });
  TranslationOutcome outcome{Dataset(data.target()), 0, {}};
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const LabeledInstance& source = data[i];
    if (!slots[i].value) {
      ++outcome.skipped;
      outcome.failures.push_back(source.tweet.id + ": " + slots[i].error);
      continue;
    }
    outcome.dataset.Add(LabeledInstance{Preprocess(*slots[i].value, source.tweet.id),
                                        source.label, Origin::kTranslated});
  }
  CheckSkipRate(outcome.skipped, data.size(), "instances");
  return outcome;
}

Dataset MergeTraining(const Dataset& gold, const Dataset& extra) {
  if (!(gold.target() == extra.target())) {
    throw UsageError("cannot merge " + extra.target().TaskId() + " data into " +
                     gold.target().TaskId() + " data");
  }
  Dataset merged(gold.target());
  for (const LabeledInstance& instance : gold.instances()) merged.Add(instance);
  for (const LabeledInstance& instance : extra.instances()) merged.Add(instance);
  return merged;
}

LexiconTranslation TranslateLexicon(const Lexicon& lexicon,
                                    const Translator& translator,
                                    const TranslateOptions& options) {
  std::vector<const std::string*> keys;
  for (const auto& entry : lexicon.entries()) keys.push_back(&entry.first);
  const std::vector<Slot> slots =
      RunIndexed(keys.size(), options.workers, [&](std::size_t i) {
        std::string translated = unicode::ToLowerUtf8(text_io::Trim(
            translator.Translate(*keys[i], options.source, options.target)));
        if (translated.empty()) throw ComputationError("empty translation");
        return translated;
      });

  LexiconTranslation result{Lexicon(lexicon.name()), 0, {}};
  std::size_t i = 0;
  for (const auto& [token, scores] : lexicon.entries()) {
    const Slot& slot = slots[i++];
    if (!slot.value) {
      ++result.skipped;
      result.failures.push_back(token + ": " + slot.error);
      continue;
    }
    const Lexicon::Scores* existing = result.lexicon.Find(*slot.value);
    for (const auto& [dimension, score] : scores) {
      if (existing != nullptr) {
        const auto it = existing->find(dimension);
        if (it != existing->end() && std::abs(it->second) >= std::abs(score)) {
          continue;
        }
      }
      result.lexicon.Set(*slot.value, dimension, score);
      existing = result.lexicon.Find(*slot.value);
    }
  }
  CheckSkipRate(result.skipped, keys.size(), "lexicon entries");
  return result;
}

}  // namespace tweetaffect
