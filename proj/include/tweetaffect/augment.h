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

#ifndef TWEETAFFECT_AUGMENT_H_
#define TWEETAFFECT_AUGMENT_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tweetaffect/corpus.h"
#include "tweetaffect/lexicons.h"

namespace tweetaffect {

// Text-to-text translation between two language codes. Implementations throw
// tweetaffect::Error on failure and must tolerate concurrent calls.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::string Translate(std::string_view text, std::string_view source,
                                std::string_view target) const = 0;
};

class IdentityTranslator : public Translator {
 public:
  std::string Translate(std::string_view text, std::string_view source,
                        std::string_view target) const override;
};

// Offline word-by-word stub. Each whitespace token is looked up as is, then
// lowercased, then with its leading and trailing punctuation set aside;
// unknown tokens pass through. Tokens are re-joined with single spaces, so the
// token count never changes.
class DictionaryTranslator : public Translator {
 public:
  explicit DictionaryTranslator(std::map<std::string, std::string> mapping);
  // `source<TAB>target` per line; '#' comments and blank lines skipped.
  static DictionaryTranslator Load(const std::filesystem::path& path);

  std::string Translate(std::string_view text, std::string_view source,
                        std::string_view target) const override;
  std::string TranslateToken(std::string_view token) const;

  const std::map<std::string, std::string>& mapping() const { return mapping_; }

 private:
  const std::string* Lookup(std::string_view token) const;

  std::map<std::string, std::string> mapping_;
};

// Remote endpoint: POST <base_url>/<source>-<target> with the text as a
// text/plain UTF-8 body; a 200 response body is the translation. Failed
// requests are retried `retries` times before an IoError is raised. Plain
// http only.
class HttpTranslator : public Translator {
 public:
  explicit HttpTranslator(std::string base_url, int retries = 2,
                          std::chrono::milliseconds timeout =
                              std::chrono::milliseconds(10000));

  std::string Translate(std::string_view text, std::string_view source,
                        std::string_view target) const override;

 private:
  std::string host_;  // scheme://host[:port]
  std::string path_prefix_;
  int retries_;
  std::chrono::milliseconds timeout_;
};

struct TranslateOptions {
  std::string source = "en";
  std::string target = "es";
  // Concurrent translation calls; results keep input order regardless.
  std::size_t workers = 1;
};

struct TranslationOutcome {
  Dataset dataset;
  std::size_t skipped = 0;
  // "<id>: <message>" per skipped item, in input order.
  std::vector<std::string> failures;
};

// Translates every instance's raw text, re-preprocesses it and copies the
// label; the result is tagged Origin::kTranslated. Instances whose
// translation fails are skipped; more than half skipped is a
// ComputationError.
TranslationOutcome TranslateDataset(const Dataset& data,
                                    const Translator& translator,
                                    const TranslateOptions& options = {});

// Gold instances first, then `extra`, origins kept. Targets must match.
Dataset MergeTraining(const Dataset& gold, const Dataset& extra);

struct LexiconTranslation {
  Lexicon lexicon;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
};

// Translates token keys. Keys that collide after translation keep, per
// dimension, the score with the largest magnitude (first in token order on a
// tie). Failure handling follows TranslateDataset.
LexiconTranslation TranslateLexicon(const Lexicon& lexicon,
                                    const Translator& translator,
                                    const TranslateOptions& options = {});

}  // namespace tweetaffect

#endif  // TWEETAFFECT_AUGMENT_H_
