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

#ifndef TWEETAFFECT_EMBEDDINGS_H_
#define TWEETAFFECT_EMBEDDINGS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tweetaffect/corpus.h"

namespace tweetaffect {

// Dense features with named segments, e.g. [("emb", 100), ("lex:afinn", 4)].
struct FeatureVector {
  std::vector<double> values;
  std::vector<std::pair<std::string, std::size_t>> layout;

  std::size_t width() const { return values.size(); }
  bool operator==(const FeatureVector&) const = default;
};

// Concatenates values and layouts in order. Throws on an empty list.
FeatureVector ConcatFeatures(std::span<const FeatureVector> blocks);

// Training settings of the tables this library consumes. Metadata only.
struct EmbeddingProvenance {
  std::string algorithm = "cbow";
  int window = 40;
  int min_count = 5;
};

class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dim);

  // Throws on a length mismatch or non-finite component.
  void Add(std::string token, std::vector<double> vector);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return index_.size(); }

  // nullptr when the token is out of vocabulary.
  const double* Find(std::string_view token) const;

  // Tokens in insertion order.
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::span<const double> Vector(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }

  EmbeddingProvenance provenance;

 private:
  std::size_t dim_;
  std::vector<std::string> tokens_;
  std::vector<double> values_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Text format: `word v1 ... vdim` per line, optional `count dim` header.
EmbeddingTable LoadEmbeddings(
    const std::filesystem::path& path,
    const std::optional<std::unordered_set<std::string>>& vocab = std::nullopt);
void SaveEmbeddings(const EmbeddingTable& table,
                    const std::filesystem::path& path);

// Mean of in-vocabulary token vectors, zeros when none match.
std::vector<double> EmbedTweet(const Tweet& tweet, const EmbeddingTable& table);

}  // namespace tweetaffect

#endif  // TWEETAFFECT_EMBEDDINGS_H_
